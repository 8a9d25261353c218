#ifndef MNG_IO_HPP
#define MNG_IO_HPP

#include <mng/graph.hpp>

#include <string>

// Text format for mixed graphs.  A file is a header
//
//   mng 1
//   m <arc colours>
//   n <edge colours>
//   vertices <count>
//
// followed by body lines in any order: `a <colour> <tail> <head>` for arcs,
// `e <colour> <u> <v>` for edges, `v <id> <label>` for optional labels.
// Blank lines and lines starting with `#` are ignored.  Serialisation is
// canonical (labels by id, then adjacencies sorted by kind, colour, smaller
// endpoint, larger endpoint), so serialise-parse round-trips are byte exact.

namespace mng {

class ParseError : public Error {
  public:
    ParseError(int line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}

    int line() const { return line_; }

  private:
    int line_;
};

MixedGraph parse(const std::string& text);
MixedGraph parse_file(const std::string& path);

std::string serialize(const MixedGraph& g);

// Debugging aid: Graphviz rendering with orientation and colour attributes.
// Not part of the round-trip contract.
std::string to_dot(const MixedGraph& g);

}  // namespace mng

#endif
