#pragma once

// planar_code binary interchange format (plantri/buckygen compatible).
//
// Layout: optional 15-byte ASCII header ">>planar_code<<", then one record
// per graph.  A record is the vertex count n followed, for each vertex
// 1..n, by its neighbors in rotation order, each list 0-terminated.  Values
// are single unsigned bytes for n <= 255; for larger graphs the record
// starts with a 0x00 byte and every value (n included) is a little-endian
// unsigned 16-bit integer.  Vertex ids are 1-based on the wire, 0-based in
// memory.  The writer always emits the header.

#include <cstdint>
#include <string>
#include <vector>

#include "fg/planar_graph.hpp"

namespace fg {

std::vector<CubicPlanarGraph> read_planar_code(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> write_planar_code(const std::vector<CubicPlanarGraph>& graphs);

std::vector<CubicPlanarGraph> read_planar_code_file(const std::string& path);
void write_planar_code_file(const std::string& path, const std::vector<CubicPlanarGraph>& graphs);

} // namespace fg
