#include "hgo/host_format.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace hgo {

namespace {

std::string stripped(const std::string& raw) {
  std::string line = raw;
  if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
  auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

}  // namespace

ColoredGraph readHostGraph(std::istream& in) {
  int n = -1;
  bool directed = false;
  bool haveHeader = false;
  std::vector<int> vertexColors;
  std::vector<char> colorSet;
  std::vector<ColoredGraph::EdgeEntry> edges;

  std::string raw;
  int lineNo = 0;
  while (std::getline(in, raw)) {
    ++lineNo;
    std::string line = stripped(raw);
    if (line.empty()) continue;

    auto parseErr = [&](const std::string& msg) -> void {
      fail(Errc::ParseError, "line " + std::to_string(lineNo) + ": " + msg);
    };
    std::istringstream ss(line);
    std::string tag, extra;
    ss >> tag;

    if (!haveHeader) {
      std::string kw;
      int d = -1;
      if (tag != "n" || !(ss >> n >> kw >> d) || kw != "directed" || (d != 0 && d != 1))
        parseErr("expected header \"n <N> directed <0|1>\"");
      if (n < 1) parseErr("order must be positive");
      if (ss >> extra) parseErr("unexpected trailing content \"" + extra + "\"");
      directed = d == 1;
      vertexColors.assign(n, 0);
      colorSet.assign(n, 0);
      haveHeader = true;
    } else if (tag == "v") {
      int idx = 0, color = 0;
      if (!(ss >> idx >> color)) parseErr("expected \"v <idx> <color>\"");
      if (ss >> extra) parseErr("unexpected trailing content \"" + extra + "\"");
      if (idx < 0 || idx >= n) fail(Errc::VertexOutOfRange, "line " + std::to_string(lineNo) +
                                                                ": vertex " + std::to_string(idx));
      if (color < 0)
        fail(Errc::NegativeColor, "line " + std::to_string(lineNo) + ": vertex " + std::to_string(idx));
      if (colorSet[idx]) parseErr("duplicate color for vertex " + std::to_string(idx));
      vertexColors[idx] = color;
      colorSet[idx] = 1;
    } else if (tag == "e") {
      int u = 0, v = 0, color = 0;
      if (!(ss >> u >> v >> color)) parseErr("expected \"e <u> <v> <color>\"");
      if (ss >> extra) parseErr("unexpected trailing content \"" + extra + "\"");
      if (color < 1) parseErr("edge color must be >= 1 (0 means no edge)");
      edges.push_back({u, v, color});
    } else {
      parseErr("unknown record \"" + tag + "\"");
    }
  }
  if (!haveHeader) fail(Errc::ParseError, "missing \"n <N> directed <0|1>\" header");
  return ColoredGraph::build(n, directed, vertexColors, edges);
}

ColoredGraph readHostGraphFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot open " + path.string());
  return readHostGraph(in);
}

}  // namespace hgo
