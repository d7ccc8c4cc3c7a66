#ifndef HGO_HOST_FORMAT_HPP
#define HGO_HOST_FORMAT_HPP

#include <filesystem>
#include <iosfwd>

#include "hgo/graph.hpp"

namespace hgo {

// Host graph text format:
//   n <N> directed <0|1>         header, first content line
//   v <idx> <color>              optional; vertices default to color 0
//   e <u> <v> <color>            color >= 1; arc u->v when directed
//   # comment
// Undirected files may mention an edge in either or both orientations as
// long as colors agree.
ColoredGraph readHostGraph(std::istream& in);
ColoredGraph readHostGraphFile(const std::filesystem::path& path);

}  // namespace hgo

#endif  // HGO_HOST_FORMAT_HPP
