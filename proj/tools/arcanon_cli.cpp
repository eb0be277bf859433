#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "arcanon/circular_canon.hpp"
#include "arcanon/core_model.hpp"
#include "arcanon/graph_classes.hpp"
#include "arcanon/interval_canon.hpp"
#include "arcanon/io.hpp"
#include "arcanon/star_system.hpp"

using namespace arcanon;
using nlohmann::json;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json labeling_json(const Labeling& lab) {
    json j = json::object();
    for (const auto& [v, p] : lab.pos) j[v] = p;
    return j;
}

void print_labeling(const Labeling& lab) {
    for (const auto& [v, p] : lab.pos) std::cout << v << " " << p << "\n";
}

std::string arc_line(const VertexId& v, const Arc& a) {
    switch (a.kind) {
        case Arc::Kind::Empty: return v + " empty";
        case Arc::Kind::Full: return v + " full";
        case Arc::Kind::Span:
            return v + " " + std::to_string(a.start) + " " + std::to_string(a.end);
    }
    return v;
}

// Interval models print on the same circle layout with 0-based positions.
VertexArcModel as_arc_model(const GraphCanonResult& res) {
    if (res.arc_model) return *res.arc_model;
    VertexArcModel m;
    m.circle = res.interval_model->length;
    for (const auto& [v, s] : res.interval_model->intervals)
        m.arcs.emplace_back(v, s.is_empty() ? Arc::empty()
                                            : Arc::span(s.lo - 1, s.hi - 1));
    return m;
}

// Preference order for automatic class selection.
const std::vector<ClassTag> kLabelableTags = {
    ClassTag::ProperInterval,      ClassTag::PCA,      ClassTag::TCA,
    ClassTag::ConvexBipartite,     ClassTag::Biconvex, ClassTag::CircularConvexBipartite,
    ClassTag::CoConvex,
};

int run_recognize(const std::string& file, bool as_json) {
    Graph g = parse_graph(read_file(file));
    std::vector<std::string> tags;
    for (ClassTag t : recognize(g)) tags.push_back(to_string(t));
    std::sort(tags.begin(), tags.end());
    if (as_json) {
        std::cout << json{{"status", "ok"}, {"result", tags}, {"labeling", nullptr}}
                  << "\n";
    } else {
        for (const auto& t : tags) std::cout << t << "\n";
    }
    return kExitYes;
}

int run_canon(const std::string& kind, const std::string& file, bool linear,
              bool as_json) {
    if (kind == "hypergraph") {
        Hypergraph h = parse_hypergraph(read_file(file));
        std::string form;
        Labeling lab;
        if (linear) {
            auto res = canonical_interval(h);
            if (!res) {
                std::cerr << "error: not an interval hypergraph\n";
                return kExitError;
            }
            form = res->serialized_form;
            lab = res->labeling;
        } else {
            if (h.size() == 0) {
                form = "A0";
            } else {
                auto res = canonical_arc(h);
                if (!res) {
                    std::cerr << "error: not a circular-arc hypergraph\n";
                    return kExitError;
                }
                form = res->serialized_form;
                lab = res->labeling;
            }
        }
        if (as_json) {
            std::cout << json{{"status", "ok"},
                              {"result", form},
                              {"labeling", labeling_json(lab)}}
                      << "\n";
        } else {
            std::cout << form << "\n";
            print_labeling(lab);
        }
        return kExitYes;
    }

    Graph g = parse_graph(read_file(file));
    for (ClassTag t : kLabelableTags) {
        auto res = canonical_label(g, t);
        if (!res) continue;
        if (as_json) {
            std::cout << json{{"status", "ok"},
                              {"result", {{"class", to_string(t)},
                                          {"form", res->canonical_form}}},
                              {"labeling", labeling_json(res->labeling)}}
                      << "\n";
        } else {
            std::cout << "class " << to_string(t) << "\n";
            std::cout << res->canonical_form << "\n";
            print_labeling(res->labeling);
        }
        return kExitYes;
    }
    std::cerr << "error: no supported class admits a canonical labeling\n";
    return kExitError;
}

int run_model(const std::string& file, bool proper, bool as_json) {
    Graph g = parse_graph(read_file(file));
    std::optional<GraphCanonResult> res;
    if (proper) {
        res = proper_arc_model_pca(g);
    } else {
        res = tca_arc_model(g);
        if (!res) res = coconvex_arc_model(g);
    }
    if (!res || (!res->arc_model && !res->interval_model)) {
        std::cerr << (proper ? "error: no proper model in the requested class\n"
                             : "error: no model in the supported classes\n");
        return kExitError;
    }
    VertexArcModel m = as_arc_model(*res);
    if (as_json) {
        json arcs = json::array();
        for (const auto& [v, a] : m.arcs) arcs.push_back(arc_line(v, a));
        std::cout << json{{"status", "ok"},
                          {"result", {{"circle", m.circle}, {"arcs", arcs}}},
                          {"labeling", labeling_json(res->labeling)}}
                  << "\n";
    } else {
        std::cout << "circle " << m.circle << "\n";
        for (const auto& [v, a] : m.arcs) std::cout << arc_line(v, a) << "\n";
    }
    return kExitYes;
}

int run_iso(const std::string& file_a, const std::string& file_b,
            const std::string& tag_name, bool as_json) {
    Graph a = parse_graph(read_file(file_a));
    Graph b = parse_graph(read_file(file_b));
    std::optional<IsoResult> res;
    if (!tag_name.empty()) {
        auto tag = class_tag_from_string(tag_name);
        if (!tag) {
            std::cerr << "error: unknown class '" << tag_name << "'\n";
            return kExitError;
        }
        res = isomorphic(a, b, *tag);
        if (!res) {
            std::cerr << "error: input outside class " << tag_name << "\n";
            return kExitError;
        }
    } else {
        for (ClassTag t : kLabelableTags) {
            res = isomorphic(a, b, t);
            if (res) break;
        }
        if (!res) {
            std::cerr << "error: no common supported class\n";
            return kExitError;
        }
    }
    if (!res->isomorphic) {
        if (as_json)
            std::cout << json{{"status", "no"},
                              {"result", "NOT-ISOMORPHIC"},
                              {"labeling", nullptr}}
                      << "\n";
        else
            std::cout << "NOT-ISOMORPHIC\n";
        return kExitNo;
    }
    if (as_json) {
        json bij = json::object();
        for (const auto& [x, y] : res->bijection) bij[x] = y;
        std::cout << json{{"status", "ok"}, {"result", "ISOMORPHIC"}, {"labeling", bij}}
                  << "\n";
    } else {
        std::cout << "ISOMORPHIC\n";
        for (const auto& [x, y] : res->bijection) std::cout << x << " " << y << "\n";
    }
    return kExitYes;
}

int run_ssp(const std::string& file, const std::string& tag_name, bool as_json) {
    Hypergraph h = parse_hypergraph(read_file(file));
    std::optional<Graph> sol;
    if (tag_name.empty() || tag_name == "TCA" || tag_name == "PCA") {
        sol = ssp_ca(h);
    } else if (tag_name == "ProperInterval") {
        sol = ssp_proper_interval(h);
    } else if (tag_name == "CoConvex") {
        sol = ssp_coconvex(h);
    } else {
        std::cerr << "error: unsupported class '" << tag_name << "'\n";
        return kExitError;
    }
    if (!sol) {
        if (as_json)
            std::cout << json{{"status", "no"},
                              {"result", "NO-SOLUTION"},
                              {"labeling", nullptr}}
                      << "\n";
        else
            std::cout << "NO-SOLUTION\n";
        return kExitNo;
    }
    if (as_json) {
        json edges = json::array();
        for (const auto& [x, y] : sol->edge_name_list())
            edges.push_back(json::array({x, y}));
        std::cout << json{{"status", "ok"},
                          {"result", {{"graph", emit_graph(*sol)}, {"edges", edges}}},
                          {"labeling", nullptr}}
                  << "\n";
    } else {
        std::cout << emit_graph(*sol);
    }
    return kExitYes;
}

int run_ones(const std::string& file, bool circular, bool as_json) {
    BinaryMatrix m = parse_matrix(read_file(file));
    auto perm = circular ? circular_ones(m) : consecutive_ones(m);
    if (!perm) {
        if (as_json)
            std::cout << json{{"status", "no"}, {"result", "NO"}, {"labeling", nullptr}}
                      << "\n";
        else
            std::cout << "NO\n";
        return kExitNo;
    }
    if (as_json) {
        std::cout << json{{"status", "ok"}, {"result", *perm}, {"labeling", nullptr}}
                  << "\n";
    } else {
        for (size_t i = 0; i < perm->size(); ++i)
            std::cout << (i ? " " : "") << (*perm)[i];
        std::cout << "\n";
    }
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Canonical representations of circular-arc structures"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "mirror output as a single JSON object");

    std::string file, file_b, kind = "graph", tag;
    bool proper = false, linear = false;

    auto* rec = app.add_subcommand("recognize", "list recognized graph classes");
    rec->add_option("file", file)->required();

    auto* canon = app.add_subcommand("canon", "canonical form and labeling");
    canon->add_option("--kind", kind)->check(CLI::IsMember({"graph", "hypergraph"}));
    canon->add_flag("--interval", linear,
                    "use the interval (consecutive-ones) canonical form");
    canon->add_option("file", file)->required();

    auto* model = app.add_subcommand("model", "arc or interval intersection model");
    model->add_flag("--proper", proper, "require a proper model");
    model->add_option("file", file)->required();

    auto* iso = app.add_subcommand("iso", "isomorphism via canonical forms");
    iso->add_option("fileA", file)->required();
    iso->add_option("fileB", file_b)->required();
    iso->add_option("--class", tag, "restrict to one graph class");

    auto* ssp = app.add_subcommand("ssp", "reconstruct a graph from closed neighborhoods");
    ssp->add_option("file", file)->required();
    ssp->add_option("--class", tag, "restrict to one graph class");

    auto* circ = app.add_subcommand("circ-ones", "circular-ones column permutation");
    circ->add_option("matrix", file)->required();

    auto* cons = app.add_subcommand("cons-ones", "consecutive-ones column permutation");
    cons->add_option("matrix", file)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (rec->parsed()) return run_recognize(file, as_json);
        if (canon->parsed()) return run_canon(kind, file, linear, as_json);
        if (model->parsed()) return run_model(file, proper, as_json);
        if (iso->parsed()) return run_iso(file, file_b, tag, as_json);
        if (ssp->parsed()) return run_ssp(file, tag, as_json);
        if (circ->parsed()) return run_ones(file, true, as_json);
        if (cons->parsed()) return run_ones(file, false, as_json);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
