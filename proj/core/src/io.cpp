#include <mng/io.hpp>

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace mng {

namespace {

std::vector<std::string> split_words(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string word;
    while (in >> word) out.push_back(word);
    return out;
}

int parse_int(const std::string& word, int line, const char* what) {
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size())
        throw ParseError(line, std::string("expected an integer for ") + what +
                                   ", got '" + word + "'");
    return value;
}

std::string trim(const std::string& s) {
    size_t first = s.find_first_not_of(" \t\r");
    size_t last = s.find_last_not_of(" \t\r");
    if (first == std::string::npos) return "";
    return s.substr(first, last - first + 1);
}

}  // namespace

MixedGraph parse(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    int header_stage = 0;  // how many of (mng, m, n, vertices) are read
    int m = 0, n = 0, vertices = 0;
    std::vector<Adjacency> adjacencies;
    std::vector<std::string> labels;
    bool any_label = false;
    std::set<std::pair<Vertex, Vertex>> seen_pairs;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> words = split_words(line);

        if (header_stage < 4) {
            static const char* expected[] = {"mng", "m", "n", "vertices"};
            if (words[0] != expected[header_stage])
                throw ParseError(line_no, "expected '" +
                                              std::string(expected[header_stage]) +
                                              " <value>' in the header, got '" +
                                              words[0] + "'");
            if (words.size() != 2)
                throw ParseError(line_no, "header line needs exactly one value");
            switch (header_stage) {
                case 0:
                    if (words[1] != "1")
                        throw ParseError(line_no, "unsupported format version '" +
                                                      words[1] + "'");
                    break;
                case 1: m = parse_int(words[1], line_no, "m"); break;
                case 2: n = parse_int(words[1], line_no, "n"); break;
                case 3:
                    vertices = parse_int(words[1], line_no, "vertices");
                    if (vertices <= 0)
                        throw ParseError(line_no,
                                         "vertex count must be positive");
                    if (m < 0 || n < 0 || m + n == 0)
                        throw ParseError(line_no,
                                         "colour bounds must be non-negative "
                                         "with m + n >= 1");
                    labels.assign(static_cast<size_t>(vertices), "");
                    break;
            }
            ++header_stage;
            continue;
        }

        if (words[0] == "a" || words[0] == "e") {
            bool is_arc = words[0] == "a";
            if (words.size() != 4)
                throw ParseError(line_no,
                                 std::string(is_arc ? "arc" : "edge") +
                                     " line needs colour and two vertex ids");
            int colour = parse_int(words[1], line_no, "colour");
            Vertex u = parse_int(words[2], line_no, "vertex id");
            Vertex v = parse_int(words[3], line_no, "vertex id");
            if (u < 0 || u >= vertices || v < 0 || v >= vertices)
                throw ParseError(line_no, "vertex id out of range 0.." +
                                              std::to_string(vertices - 1));
            if (u == v) throw ParseError(line_no, "loops are not allowed");
            int bound = is_arc ? m : n;
            if (colour < 1 || colour > bound)
                throw ParseError(line_no,
                                 std::string(is_arc ? "arc" : "edge") +
                                     " colour " + std::to_string(colour) +
                                     " exceeds " + (is_arc ? "m=" : "n=") +
                                     std::to_string(bound));
            if (!seen_pairs.insert(std::minmax(u, v)).second)
                throw ParseError(line_no, "pair (" + std::to_string(u) + ", " +
                                              std::to_string(v) +
                                              ") already has an adjacency");
            adjacencies.push_back(
                {is_arc ? AdjKind::arc : AdjKind::edge, colour, u, v});
        } else if (words[0] == "v") {
            if (words.size() < 3)
                throw ParseError(line_no, "label line needs an id and a label");
            Vertex id = parse_int(words[1], line_no, "vertex id");
            if (id < 0 || id >= vertices)
                throw ParseError(line_no, "vertex id out of range 0.." +
                                              std::to_string(vertices - 1));
            size_t at = line.find(words[1]);
            labels[static_cast<size_t>(id)] =
                trim(line.substr(at + words[1].size()));
            any_label = true;
        } else {
            throw ParseError(line_no, "unknown line kind '" + words[0] + "'");
        }
    }

    if (header_stage < 4)
        throw ParseError(line_no + 1, "incomplete header");
    return build(m, n, vertices, adjacencies,
                 any_label ? std::move(labels) : std::vector<std::string>{});
}

MixedGraph parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

std::string serialize(const MixedGraph& g) {
    std::ostringstream out;
    out << "mng 1\n";
    out << "m " << g.arc_colours() << "\n";
    out << "n " << g.edge_colours() << "\n";
    out << "vertices " << g.vertex_count() << "\n";
    if (g.has_labels())
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (!g.label(v).empty()) out << "v " << v << " " << g.label(v) << "\n";
    for (const Adjacency& a : g.adjacencies()) {
        if (a.kind == AdjKind::arc)
            out << "a " << a.colour << " " << a.u << " " << a.v << "\n";
        else
            out << "e " << a.colour << " " << std::min(a.u, a.v) << " "
                << std::max(a.u, a.v) << "\n";
    }
    return out.str();
}

std::string to_dot(const MixedGraph& g) {
    std::ostringstream out;
    out << "digraph mng {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (!g.label(v).empty()) out << " [label=\"" << g.label(v) << "\"]";
        out << ";\n";
    }
    for (const Adjacency& a : g.adjacencies()) {
        out << "  " << a.u << " -> " << a.v << " [colour=" << a.colour;
        if (a.kind == AdjKind::edge) out << ", dir=none";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace mng
