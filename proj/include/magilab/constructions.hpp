#pragma once

#include "magilab/graph.hpp"
#include "magilab/labeling.hpp"

namespace magilab {

/// β-edge consecutive magic labeling of a caterpillar with constant 2α+4β.
/// Labels follow the canonical vertex order of build_caterpillar(spec).
TotalLabeling caterpillar_beta_labeling(const CaterpillarSpec& spec);

/// Super edge-magic labeling of a caterpillar with constant 2α+3β+1,
/// obtained by shifting the X side of caterpillar_beta_labeling down.
TotalLabeling caterpillar_super_labeling(const CaterpillarSpec& spec);

/// One of the two (m+1)-edge consecutive magic labelings of the double star
/// built by build_double_star(m, n), both with constant 4m+2n+6.
///
/// The (m+1)-vertex side holds the centre v (n leaves) and the m leaves of
/// u. Variant 1 gives v the label m+1 and u the label 2m+n+3; variant 2
/// gives v the label 1 and u the label 2m+2n+3. Remaining labels of each
/// side go to its leaves in ascending canonical order.
TotalLabeling double_star_consecutive(int m, int n, int variant);

/// Label complement z -> |V|+|E|+1-z. Requires an edge-magic input.
TotalLabeling dual(const Graph& g, const TotalLabeling& labeling);

enum class LambdaStarCase { BZero, BFull, BX, BY };

/// Which block-reversal applies to a b-edge consecutive labeling. Throws
/// Error when b is not 0, |V|, or the size of a side holding {1..b}.
LambdaStarCase lambda_star_case(const Graph& g, const Bipartition* bipartition, const TotalLabeling& labeling);

/// Constant of lambda_star(labeling) predicted from the input constant.
int lambda_star_constant(const Graph& g, const Bipartition* bipartition, LambdaStarCase which, int k);

/// Reverses each label block of a b-edge consecutive magic labeling,
/// keeping b and changing the constant. `bipartition` may be null only for
/// b in {0, |V|}.
TotalLabeling lambda_star(const Graph& g, const Bipartition* bipartition, const TotalLabeling& labeling);

/// Graceful labeling from an s-edge consecutive labeling whose side of size
/// s carries {1..s}.
VertexLabeling to_graceful(const Graph& g, const Bipartition& bipartition, const TotalLabeling& labeling);

/// Super edge-magic labeling from the same input shape as to_graceful.
TotalLabeling to_super_edge_magic(const Graph& g, const Bipartition& bipartition, const TotalLabeling& labeling);

} // namespace magilab
