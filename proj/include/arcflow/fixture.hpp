#pragma once

namespace arcflow::fixture {

/// Layered taut triangulation of the mapping torus of the three-strand braid
/// sigma_1 sigma_2^{-1} (four ideal tetrahedra, four edges, eight faces).
/// Vertices 0..3 of every tetrahedron sit at the punctures P, P1, P2, P3 of
/// the fiber. The name/basis/gauge block pins the reporting coordinates so
/// drifts come out in the (t,u) basis with phi_{a,b}(t)=a, phi_{a,b}(u)=b.
inline const char* kSimplestBraidTri = R"(# mapping torus of the simplest hyperbolic braid
tetrahedra 4
glue 0 3 2 2 0312
glue 0 0 3 0 0312
glue 1 1 2 3 0312
glue 1 2 3 1 0312
glue 0 2 3 2 0123
glue 0 1 2 1 0123
glue 1 3 3 3 0123
glue 1 0 2 0 0123
taut 0 bottom 0 3 top 1 2
taut 1 bottom 1 2 top 0 3
taut 2 bottom 0 1 top 2 3
taut 3 bottom 2 3 top 0 1
name 0 P
name 1 R
name 2 B
name 3 G
basis 1 -1
basis 1 0
gauge P 2 1
gauge G 2 0
)";

/// The same flow graph, given directly with its drift labels.
inline const char* kSimplestBraidDrift = R"(# flow graph of the simplest-braid mapping torus
rank 2
vertex R
vertex B
vertex G
vertex P
tri R B 0 0
tri B R -1 1
tri R G 1 0
tri G R -1 1
tri B P 2 1
tri P B -2 0
tri G P 0 1
tri P G 1 0
tet R B -1 1
tet B R -1 2
tet G P 1 2
tet P G 1 1
)";

/// The full H^1 as a 1-dimensional slice; the Thurston norm is -2b on the
/// fibered cone.
inline const char* kSimplestBraidSlice = R"(dim 1
basis 1 0
basis 0 1
norm 0 -2
)";

}  // namespace arcflow::fixture
