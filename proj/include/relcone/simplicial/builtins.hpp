#pragma once

#include <string>
#include <vector>

#include "relcone/simplicial/map.hpp"

namespace relcone::builtins {

DeltaComplex point();
DeltaComplex s0();
/// m vertices, edges e_i = [v_i, v_{i+1 mod m}]; m = 1 is a single loop.
DeltaComplex circle(std::size_t m);
/// Standard n-simplex.
DeltaComplex simplex(int n);
/// Boundary of the (n+1)-simplex.
DeltaComplex sphere(int n);
DeltaComplex disk() ;
/// Two vertices, edges a = [v0 v1], b = [v0 v1], c = [v0 v0], two triangles.
DeltaComplex rp2();
/// Six-vertex triangulation of the projective plane.
DeltaComplex rp2_six_vertex();
/// One vertex, three edges, two triangles.
DeltaComplex torus();
/// Triangulated n x n grid of unit squares, (n+1)^2 vertices, row-major.
DeltaComplex grid(std::size_t n);

/// Spaces by name: point, s0, circle, circle:m, disk, simplex:n, sphere:n, s2, s3, rp2, rp2-6, torus, grid:n.
DeltaComplex space(const std::string& name);

/// Maps by name: deg2-circle-map, s0-in-circle, vertex-in-disk, boundary-in-disk, loop-in-rp2, square-loop-in-grid,
/// tetrahedron-in-s3, suspended-rp2-collapse,
/// circle-cover:k:d, identity:<space>, constant:<space>.
SimplicialMap map(const std::string& name);

std::vector<std::string> space_names();
std::vector<std::string> map_names();

/// Circle map circle:m -> circle:k; steps[i] in {0, 1} says whether edge i moves forward.
/// The number of forward steps must be a multiple of k.
SimplicialMap circle_walk(std::size_t k, const std::vector<int>& steps, std::size_t start = 0);

} // namespace relcone::builtins
