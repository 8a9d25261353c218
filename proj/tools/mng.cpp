// Command line surface over the mixed graph library: validation, the
// polynomial decision procedures, brute-force oracles, generators, 2-tree
// colouring and the random sampling experiment.  `--json` switches every
// command to a machine-readable report; `--strict` turns negative decision
// answers into exit status 1.  Errors exit with status 2.

#include <mng/convexity.hpp>
#include <mng/decision.hpp>
#include <mng/families.hpp>
#include <mng/io.hpp>
#include <mng/rng.hpp>
#include <mng/search.hpp>
#include <mng/twotree.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using nlohmann::json;

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

mng::MixedGraph load_graph(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return mng::parse(buffer.str());
    }
    return mng::parse_file(path);
}

std::string fixed6(double x) {
    char out[64];
    std::snprintf(out, sizeof out, "%.6f", x);
    return out;
}

void print_vertex_list(const char* prefix, const std::vector<mng::Vertex>& vs) {
    std::cout << prefix;
    for (mng::Vertex v : vs) std::cout << " " << v;
    std::cout << "\n";
}

json partition_json(const mng::Partition& p) {
    json blocks = json::array();
    for (const auto& b : p.blocks) blocks.push_back(b);
    return blocks;
}

void print_partition(const mng::Partition& p) {
    for (size_t i = 0; i < p.blocks.size(); ++i) {
        std::cout << "block " << i;
        for (mng::Vertex v : p.blocks[i]) std::cout << " " << v;
        std::cout << "\n";
    }
}

mng::Partition blocks_of_map(const mng::VertexMap& f) {
    std::vector<int> index(f.image.begin(), f.image.end());
    return mng::Partition::from_block_index(index);
}

int distinct_images(const mng::VertexMap& f) {
    std::vector<char> hit(static_cast<size_t>(f.target_size), 0);
    int count = 0;
    for (mng::Vertex v : f.image)
        if (!hit[static_cast<size_t>(v)]++) ++count;
    return count;
}

std::vector<mng::Vertex> parse_vertex_list(const std::string& spec) {
    std::vector<mng::Vertex> out;
    std::stringstream in(spec);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toolkit for mixed graphs with coloured arcs and edges"};
    app.require_subcommand(1);
    bool json_out = false, strict = false;
    app.add_flag("--json", json_out, "machine-readable output");
    app.add_flag("--strict", strict, "exit 1 on a negative decision answer");

    std::function<int()> action;

    // validate
    {
        auto* cmd = app.add_subcommand("validate", "parse a graph file");
        cmd->fallthrough();
        auto path = std::make_shared<std::string>();
        cmd->add_option("file", *path, "graph file, - for stdin")->required();
        cmd->callback([&, path] {
            action = [&, path] {
                mng::MixedGraph g = load_graph(*path);
                if (json_out) {
                    json r{{"command", "validate"},     {"valid", true},
                           {"m", g.arc_colours()},      {"n", g.edge_colours()},
                           {"vertices", g.vertex_count()},
                           {"arcs", g.arc_count()},     {"edges", g.edge_count()}};
                    std::cout << r.dump(2) << "\n";
                } else {
                    std::cout << "valid (" << g.arc_colours() << ","
                              << g.edge_colours() << ")-mixed graph: "
                              << g.vertex_count() << " vertices, "
                              << g.arc_count() << " arcs, " << g.edge_count()
                              << " edges\n";
                }
                return 0;
            };
        });
    }

    // underlying
    {
        auto* cmd = app.add_subcommand("underlying", "emit the underlying graph");
        cmd->fallthrough();
        auto path = std::make_shared<std::string>();
        cmd->add_option("file", *path)->required();
        cmd->callback([&, path] {
            action = [&, path] {
                std::string text = mng::serialize(mng::underlying(load_graph(*path)));
                if (json_out)
                    std::cout << json{{"command", "underlying"}, {"graph", text}}.dump(2)
                              << "\n";
                else
                    std::cout << text;
                return 0;
            };
        });
    }

    // hull
    {
        auto* cmd = app.add_subcommand("hull", "convex hull of a vertex set");
        cmd->fallthrough();
        auto path = std::make_shared<std::string>();
        auto set_spec = std::make_shared<std::string>();
        cmd->add_option("file", *path)->required();
        cmd->add_option("--set", *set_spec, "comma-separated vertex ids")
            ->required();
        cmd->callback([&, path, set_spec] {
            action = [&, path, set_spec] {
                mng::MixedGraph g = load_graph(*path);
                mng::HullTrace trace =
                    mng::convex_hull(g, parse_vertex_list(*set_spec));
                if (json_out) {
                    json stages = json::array();
                    for (const auto& s : trace.stages) stages.push_back(s);
                    json additions = json::array();
                    for (size_t i = 0; i < trace.additions.size(); ++i)
                        for (const auto& a : trace.additions[i])
                            additions.push_back({{"stage", i + 1},
                                                 {"vertex", a.vertex},
                                                 {"witness",
                                                  {a.witness_u, a.witness_w}}});
                    std::cout << json{{"command", "hull"},
                                      {"stages", stages},
                                      {"additions", additions},
                                      {"final", trace.final}}
                                     .dump(2)
                              << "\n";
                } else {
                    for (size_t i = 0; i < trace.stages.size(); ++i) {
                        std::cout << "stage " << i << ":";
                        for (mng::Vertex v : trace.stages[i]) std::cout << " " << v;
                        std::cout << "\n";
                        if (i < trace.additions.size())
                            for (const auto& a : trace.additions[i])
                                std::cout << "  + " << a.vertex << " between "
                                          << a.witness_u << " and " << a.witness_w
                                          << "\n";
                    }
                    print_vertex_list("final:", trace.final);
                }
                return 0;
            };
        });
    }

    // chi-s-2
    {
        auto* cmd = app.add_subcommand("chi-s-2",
                                       "decide two-block simple colourability");
        cmd->fallthrough();
        auto path = std::make_shared<std::string>();
        cmd->add_option("file", *path)->required();
        cmd->callback([&, path] {
            action = [&, path] {
                mng::MixedGraph g = load_graph(*path);
                mng::TwoColourCertificate cert = mng::decide_chi_s_two(g);
                if (json_out) {
                    json r{{"command", "chi-s-2"}, {"answer", cert.answer}};
                    if (!cert.note.empty()) r["note"] = cert.note;
                    if (cert.answer) {
                        r["partition"] = {cert.part_x, cert.part_y};
                    } else {
                        json ef = json::array(), af = json::array();
                        for (const auto& f : cert.edge_facts)
                            ef.push_back({{"colour", f.colour},
                                          {"connected_without", f.connected_without}});
                        for (const auto& f : cert.arc_facts)
                            af.push_back(
                                {{"colour", f.colour},
                                 {"condensation_strongly_connected",
                                  f.condensation_strongly_connected}});
                        r["edge_facts"] = ef;
                        r["arc_facts"] = af;
                    }
                    std::cout << r.dump(2) << "\n";
                } else {
                    std::cout << "answer: " << (cert.answer ? "yes" : "no") << "\n";
                    if (!cert.note.empty()) std::cout << "note: " << cert.note << "\n";
                    if (cert.answer) {
                        print_vertex_list("part 0:", cert.part_x);
                        print_vertex_list("part 1:", cert.part_y);
                    } else {
                        for (const auto& f : cert.edge_facts)
                            std::cout << "edge colour " << f.colour
                                      << ": removal keeps the underlying graph "
                                      << (f.connected_without ? "connected"
                                                              : "disconnected")
                                      << "\n";
                        for (const auto& f : cert.arc_facts)
                            std::cout << "arc colour " << f.colour
                                      << ": condensation "
                                      << (f.condensation_strongly_connected
                                              ? "strongly connected"
                                              : "not strongly connected")
                                      << "\n";
                    }
                }
                return cert.answer || !strict ? 0 : kExitNegative;
            };
        });
    }

    // clique / simple-clique
    for (bool simple : {false, true}) {
        auto* cmd = app.add_subcommand(simple ? "simple-clique" : "clique",
                                       simple ? "recognise a simple clique"
                                              : "recognise a clique");
        cmd->fallthrough();
        auto path = std::make_shared<std::string>();
        cmd->add_option("file", *path)->required();
        cmd->callback([&, path, simple] {
            action = [&, path, simple] {
                mng::MixedGraph g = load_graph(*path);
                bool answer =
                    simple ? mng::is_simple_clique(g) : mng::is_clique(g);
                if (json_out)
                    std::cout << json{{"command",
                                       simple ? "simple-clique" : "clique"},
                                      {"answer", answer}}
                                     .dump(2)
                              << "\n";
                else
                    std::cout << "answer: " << (answer ? "yes" : "no") << "\n";
                return answer || !strict ? 0 : kExitNegative;
            };
        });
    }

    // chi-s
    {
        auto* cmd = app.add_subcommand("chi-s", "simple chromatic number");
        cmd->fallthrough();
        auto path = std::make_shared<std::string>();
        auto use_brute = std::make_shared<bool>(false);
        auto use_complete = std::make_shared<bool>(false);
        auto budget = std::make_shared<int>(mng::kDefaultBruteBudget);
        cmd->add_option("file", *path)->required();
        auto* b = cmd->add_flag("--brute", *use_brute, "partition enumeration");
        cmd->add_flag("--complete", *use_complete,
                      "hull identification (complete graphs only)")
            ->excludes(b);
        cmd->add_option("--budget", *budget, "enumeration budget override");
        cmd->callback([&, path, use_brute, use_complete, budget] {
            action = [&, path, use_complete, budget] {
                mng::MixedGraph g = load_graph(*path);
                int value;
                mng::Partition blocks;
                const char* method;
                if (*use_complete) {
                    mng::CompleteChiS r = mng::complete_chi_s(g);
                    value = r.value;
                    blocks = blocks_of_map(r.colouring);
                    method = "complete";
                } else {
                    mng::BruteResult r = mng::brute_chi_s(g, *budget);
                    value = r.value;
                    blocks = r.witness;
                    method = "brute";
                }
                if (json_out)
                    std::cout << json{{"command", "chi-s"},
                                      {"method", method},
                                      {"value", value},
                                      {"partition", partition_json(blocks)}}
                                     .dump(2)
                              << "\n";
                else {
                    std::cout << "chi-s: " << value << " (" << method << ")\n";
                    print_partition(blocks);
                }
                return 0;
            };
        });
    }

    // chi
    {
        auto* cmd = app.add_subcommand("chi", "chromatic number");
        cmd->fallthrough();
        auto path = std::make_shared<std::string>();
        auto budget = std::make_shared<int>(mng::kDefaultBruteBudget);
        cmd->add_flag("--brute", "partition enumeration (the only method)");
        cmd->add_option("file", *path)->required();
        cmd->add_option("--budget", *budget, "enumeration budget override");
        cmd->callback([&, path, budget] {
            action = [&, path, budget] {
                mng::MixedGraph g = load_graph(*path);
                mng::BruteResult r = mng::brute_chi(g, *budget);
                if (json_out)
                    std::cout << json{{"command", "chi"},
                                      {"method", "brute"},
                                      {"value", r.value},
                                      {"partition", partition_json(r.witness)}}
                                     .dump(2)
                              << "\n";
                else {
                    std::cout << "chi: " << r.value << "\n";
                    print_partition(r.witness);
                }
                return 0;
            };
        });
    }

    // hom
    {
        auto* cmd = app.add_subcommand("hom", "search for a homomorphism");
        cmd->fallthrough();
        auto source = std::make_shared<std::string>();
        auto target = std::make_shared<std::string>();
        auto simple = std::make_shared<bool>(false);
        cmd->add_option("source", *source)->required();
        cmd->add_option("target", *target)->required();
        cmd->add_flag("--simple", *simple, "simple homomorphism");
        cmd->callback([&, source, target, simple] {
            action = [&, source, target, simple] {
                mng::MixedGraph g = load_graph(*source);
                mng::MixedGraph h = load_graph(*target);
                auto found = *simple ? mng::find_simple_homomorphism(g, h)
                                     : mng::find_homomorphism(g, h);
                if (json_out) {
                    json r{{"command", "hom"},
                           {"simple", *simple},
                           {"found", found.has_value()}};
                    if (found) r["map"] = found->image;
                    std::cout << r.dump(2) << "\n";
                } else if (found) {
                    std::cout << "found\n";
                    for (mng::Vertex v = 0; v < g.vertex_count(); ++v)
                        std::cout << v << " -> " << (*found)(v) << "\n";
                } else {
                    std::cout << "none\n";
                }
                return found || !strict ? 0 : kExitNegative;
            };
        });
    }

    // gen
    {
        auto* cmd = app.add_subcommand("gen", "generate a family member");
        cmd->fallthrough();
        auto family = std::make_shared<std::string>();
        auto params = std::make_shared<std::vector<std::string>>();
        cmd->add_option("family", *family,
                        "cayley-oriented | cayley-2ec | double-cycle-oriented | "
                        "double-cycle-2ec | transitive-tournament | cycle | "
                        "random | 2tree")
            ->required();
        cmd->add_option("params", *params, "family parameters");
        cmd->callback([&, family, params] {
            action = [&, family, params] {
                auto need = [&](size_t k) {
                    if (params->size() != k)
                        throw mng::Error("gen " + *family + ": expected " +
                                         std::to_string(k) + " parameter(s)");
                };
                auto arg_int = [&](size_t i) { return std::stoi((*params)[i]); };
                mng::MixedGraph g = [&]() -> mng::MixedGraph {
                    const std::string& f = *family;
                    if (f == "cayley-oriented") {
                        need(1);
                        return mng::cayley_oriented_clique(arg_int(0));
                    }
                    if (f == "cayley-2ec") {
                        need(1);
                        return mng::cayley_2ec_clique(arg_int(0));
                    }
                    if (f == "double-cycle-oriented") {
                        need(1);
                        return mng::double_cycle_oriented_clique(arg_int(0));
                    }
                    if (f == "double-cycle-2ec") {
                        need(1);
                        return mng::double_cycle_2ec_clique(arg_int(0));
                    }
                    if (f == "transitive-tournament") {
                        need(1);
                        return mng::transitive_tournament(arg_int(0));
                    }
                    if (f == "cycle") {
                        need(1);
                        return mng::directed_cycle(arg_int(0));
                    }
                    if (f == "random") {
                        need(5);
                        return mng::random_mixed(
                            arg_int(0), arg_int(1), arg_int(2),
                            std::stod((*params)[3]),
                            std::stoull((*params)[4]));
                    }
                    if (f == "2tree") {
                        need(3);
                        const std::string& kind = (*params)[1];
                        if (kind != "oriented" && kind != "2ec")
                            throw mng::Error(
                                "gen 2tree: kind must be oriented or 2ec");
                        return mng::random_2tree(
                            arg_int(0),
                            kind == "oriented"
                                ? mng::TwoTreeKind::oriented
                                : mng::TwoTreeKind::two_edge_coloured,
                            std::stoull((*params)[2]));
                    }
                    throw mng::Error("gen: unknown family '" + f + "'");
                }();
                std::string text = mng::serialize(g);
                if (json_out)
                    std::cout << json{{"command", "gen"},
                                      {"family", *family},
                                      {"graph", text}}
                                     .dump(2)
                              << "\n";
                else
                    std::cout << text;
                return 0;
            };
        });
    }

    // colour-2tree
    {
        auto* cmd = app.add_subcommand("colour-2tree",
                                       "constructive 2-tree simple colouring");
        cmd->fallthrough();
        auto path = std::make_shared<std::string>();
        cmd->add_option("file", *path)->required();
        cmd->callback([&, path] {
            action = [&, path] {
                mng::MixedGraph g = load_graph(*path);
                const char* kind;
                mng::VertexMap f;
                const mng::MixedGraph* target;
                if (g.arc_count() > 0 && g.edge_count() == 0) {
                    kind = "oriented";
                    f = mng::colour_oriented_2tree(g);
                    target = &mng::derive_oriented_table().target;
                } else if (g.edge_count() > 0 && g.arc_count() == 0) {
                    kind = "2ec";
                    f = mng::colour_2ec_2tree(g);
                    target = &mng::derive_2ec_table().target;
                } else {
                    throw mng::Error(
                        "colour-2tree: need a purely oriented or purely "
                        "two-edge-coloured graph");
                }
                bool valid = mng::is_simple_homomorphism_map(g, f, *target);
                if (json_out)
                    std::cout << json{{"command", "colour-2tree"},
                                      {"kind", kind},
                                      {"map", f.image},
                                      {"distinct_images", distinct_images(f)},
                                      {"valid", valid}}
                                     .dump(2)
                              << "\n";
                else {
                    std::cout << "kind: " << kind << "\n";
                    std::cout << "distinct images: " << distinct_images(f)
                              << "\n";
                    std::cout << "valid: " << (valid ? "yes" : "no") << "\n";
                    for (mng::Vertex v = 0; v < g.vertex_count(); ++v)
                        std::cout << v << " -> " << f(v) << "\n";
                }
                return valid ? 0 : kExitError;
            };
        });
    }

    // experiment
    {
        auto* cmd = app.add_subcommand(
            "experiment", "sample random graphs, count cliques and 2-colourability");
        cmd->fallthrough();
        auto m = std::make_shared<int>();
        auto n = std::make_shared<int>();
        auto v = std::make_shared<int>();
        auto p = std::make_shared<double>(0.5);
        auto samples = std::make_shared<int>(100);
        auto seed = std::make_shared<std::uint64_t>(0);
        cmd->add_option("--m", *m, "arc colours")->required();
        cmd->add_option("--n", *n, "edge colours")->required();
        cmd->add_option("--v", *v, "vertices")->required();
        cmd->add_option("--p", *p, "adjacency probability");
        cmd->add_option("--samples", *samples, "sample count");
        cmd->add_option("--seed", *seed, "base seed");
        cmd->callback([&, m, n, v, p, samples, seed] {
            action = [&, m, n, v, p, samples, seed] {
                int simple_cliques = 0, cliques = 0, two_colourable = 0;
                for (int i = 0; i < *samples; ++i) {
                    mng::MixedGraph g = mng::random_mixed(
                        *m, *n, *v, *p,
                        mng::substream_seed(*seed,
                                            static_cast<std::uint64_t>(i)));
                    if (mng::is_simple_clique(g)) ++simple_cliques;
                    if (mng::is_clique(g)) ++cliques;
                    if (mng::decide_chi_s_two(g).answer) ++two_colourable;
                }
                double fraction =
                    *samples > 0
                        ? static_cast<double>(simple_cliques) / *samples
                        : 0.0;
                if (json_out) {
                    std::cout << json{{"command", "experiment"},
                                      {"m", *m},
                                      {"n", *n},
                                      {"v", *v},
                                      {"p", *p},
                                      {"samples", *samples},
                                      {"seed", *seed},
                                      {"simple_cliques", simple_cliques},
                                      {"cliques", cliques},
                                      {"chi_s_2", two_colourable},
                                      {"simple_clique_fraction",
                                       fixed6(fraction)}}
                                     .dump(2)
                              << "\n";
                } else {
                    std::cout << "m\tn\tv\tp\tsamples\tseed\tsimple_cliques\t"
                                 "cliques\tchi_s_2\tsimple_clique_fraction\n";
                    std::cout << *m << "\t" << *n << "\t" << *v << "\t"
                              << fixed6(*p) << "\t" << *samples << "\t" << *seed
                              << "\t" << simple_cliques << "\t" << cliques
                              << "\t" << two_colourable << "\t"
                              << fixed6(fraction) << "\n";
                }
                return 0;
            };
        });
    }

    // dot
    {
        auto* cmd = app.add_subcommand("dot", "Graphviz export for debugging");
        cmd->fallthrough();
        auto path = std::make_shared<std::string>();
        cmd->add_option("file", *path)->required();
        cmd->callback([&, path] {
            action = [&, path] {
                std::cout << mng::to_dot(load_graph(*path));
                return 0;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        return action();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
