// whitealg: exact-arithmetic calculator for the Whitehead algebras of
// suspended projective spaces. Subcommands expose basis/rank computations,
// bracket reduction, Hopf-algebra primitives, and automorphism reports.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "whitealg/aut_group.hpp"
#include "whitealg/format.hpp"
#include "whitealg/graded_lie.hpp"
#include "whitealg/json_io.hpp"
#include "whitealg/parser.hpp"
#include "whitealg/tensor_hopf.hpp"

using namespace whitealg;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SpaceSpec {
    Family family = Family::HP;
    std::vector<int> custom_degrees;
};

SpaceSpec parse_space(const std::string& s) {
    SpaceSpec spec;
    if (s == "hp") {
        spec.family = Family::HP;
    } else if (s == "cp") {
        spec.family = Family::CP;
    } else if (s == "rp") {
        spec.family = Family::RP;
    } else if (s.rfind("custom:", 0) == 0) {
        spec.family = Family::Custom;
        std::stringstream ss(s.substr(7));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                spec.custom_degrees.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw UsageError("bad degree '" + item + "' in --space " + s);
            }
        }
        if (spec.custom_degrees.empty()) throw UsageError("--space custom: needs a degree list");
    } else {
        throw UsageError("--space must be hp, cp, rp or custom:<even degree list>");
    }
    return spec;
}

GeneratorSchedule schedule_for(const SpaceSpec& spec, int generator_count, int cap) {
    if (spec.family == Family::Custom) {
        std::vector<int> degrees = spec.custom_degrees;
        if (generator_count < static_cast<int>(degrees.size()))
            degrees.resize(generator_count < 0 ? 0 : generator_count);
        return GeneratorSchedule::custom(degrees, cap);
    }
    return make_schedule(spec.family, generator_count, cap);
}

// generators needed to cover a Whitehead dimension
int count_for_whitehead_dim(const SpaceSpec& spec, int dim) {
    switch (spec.family) {
        case Family::HP: return dim >= 5 ? (dim - 1) / 4 : 0;
        case Family::CP: return dim >= 3 ? (dim - 1) / 2 : 0;
        case Family::RP: return 0;
        case Family::Custom: return static_cast<int>(spec.custom_degrees.size());
    }
    return 0;
}

// largest generator index mentioned by an expression
int max_generator_index(const BracketExpr& e, const SpaceSpec& spec) {
    int best = 0;
    auto visit = [&](auto&& self, const BracketExpr& node) -> void {
        if (node.kind == BracketExpr::Kind::Generator) {
            size_t i = 0;
            while (i < node.name.size() && std::isalpha(static_cast<unsigned char>(node.name[i])))
                ++i;
            std::string alias = node.name.substr(0, i);
            long number = std::stol(node.name.substr(i));
            long index = (alias == "xi") ? (number - 1) / 2 : number;
            best = std::max(best, static_cast<int>(index));
        }
        for (const BracketExpr& c : node.children) self(self, c);
    };
    visit(visit, e);
    if (spec.family == Family::Custom)
        best = std::max(best, static_cast<int>(spec.custom_degrees.size()));
    return best;
}

Json basis_doc(const SpaceSpec& spec, int dim, const std::vector<std::string>& expressions) {
    Json j;
    j["schema"] = kSchemaTag;
    j["type"] = "basis_list";
    j["space"] = family_name(spec.family);
    j["whitehead_dim"] = dim;
    j["rank"] = expressions.size();
    j["expressions"] = expressions;
    return j;
}

AlphaConfig parse_alpha_flags(const TruncatedAlgebra& L, const std::vector<std::string>& flags) {
    AlphaConfig config = uniform_alpha(L);
    for (const std::string& raw : flags) {
        std::string s;
        for (char c : raw)
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
        if (s.empty() || s[0] != '(') throw UsageError("--alpha expects \"(n,w)=k\", got '" + raw + "'");
        int depth = 0;
        size_t close = std::string::npos;
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '(' || s[i] == '[') ++depth;
            if (s[i] == ')' || s[i] == ']') --depth;
            if (depth == 0 && s[i] == ')') {
                close = i;
                break;
            }
        }
        if (close == std::string::npos || close + 1 >= s.size() || s[close + 1] != '=')
            throw UsageError("--alpha expects \"(n,w)=k\", got '" + raw + "'");
        std::string inner = s.substr(1, close - 1);
        std::string value = s.substr(close + 2);

        size_t comma = std::string::npos;
        depth = 0;
        for (size_t i = 0; i < inner.size(); ++i) {
            if (inner[i] == '[' || inner[i] == '(') ++depth;
            if (inner[i] == ']' || inner[i] == ')') --depth;
            if (depth == 0 && inner[i] == ',') {
                comma = i;
                break;
            }
        }
        if (comma == std::string::npos)
            throw UsageError("--alpha expects \"(n,w)=k\", got '" + raw + "'");
        int n = 0;
        try {
            n = std::stoi(inner.substr(0, comma));
        } catch (const std::exception&) {
            throw UsageError("--alpha layer index must be an integer in '" + raw + "'");
        }
        LieElement w = reduce(parse_expr(inner.substr(comma + 1)), L.schedule());
        if (w.term_count() != 1 || w.terms().begin()->second != 1)
            throw UsageError("--alpha element must be a single basis bracket in '" + raw + "'");
        Integer k;
        try {
            k = Integer(value);
        } catch (const std::exception&) {
            throw UsageError("--alpha value must be an integer in '" + raw + "'");
        }
        config[{n, w.terms().begin()->first.word}] = k;
    }
    return config;
}

void print_rank_table(std::ostream& os, const RankTableDoc& doc) {
    os << "dim  rank  basis\n";
    for (const RankTableRow& row : doc.rows) {
        os << row.whitehead_dim;
        for (int pad = static_cast<int>(std::to_string(row.whitehead_dim).size()); pad < 5; ++pad)
            os << ' ';
        os << row.rank;
        for (int pad = static_cast<int>(std::to_string(row.rank).size()); pad < 6; ++pad) os << ' ';
        for (size_t i = 0; i < row.basis_expressions.size(); ++i) {
            if (i) os << ", ";
            os << row.basis_expressions[i];
        }
        os << "\n";
    }
}

void print_aut_report(std::ostream& os, const AutReport& r) {
    os << "finite: " << (r.is_finite ? "true" : "false") << "\n";
    if (r.order) os << "order: " << *r.order << "\n";
    os << "abelian: " << (r.is_abelian ? "true" : "false") << "\n";
    os << "unipotent rank: " << r.unipotent_rank << "\n";
    if (!r.shape.empty()) os << "shape: " << r.shape << "\n";
    if (r.infinite_witness) {
        os << "infinite-order witness: " << r.infinite_witness->morphism << "  (moves "
           << r.infinite_witness->witness_element << " by " << r.infinite_witness->orbit_delta
           << " per iterate)\n";
    }
    if (r.noncommuting) {
        os << "noncommuting pair:\n";
        os << "  f: " << r.noncommuting->f << "\n";
        os << "  g: " << r.noncommuting->g << "\n";
        os << "  f.g(" << r.noncommuting->on_generator << ") = " << r.noncommuting->fg_image
           << "\n";
        os << "  g.f(" << r.noncommuting->on_generator << ") = " << r.noncommuting->gf_image
           << "\n";
        os << "  discrepancy: " << r.noncommuting->discrepancy << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the Whitehead algebras of suspended projective spaces"};
    app.require_subcommand(1);

    std::string space_arg = "hp";
    std::string ring_arg = "z";
    std::string output_arg = "table";
    int cap_arg = kDefaultDegreeCap;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--space", space_arg, "hp | cp | rp | custom:<even samelson degrees>")
            ->capture_default_str();
        cmd->add_option("--ring", ring_arg, "z | q")->capture_default_str();
        cmd->add_option("--output", output_arg, "table | json")->capture_default_str();
        cmd->add_option("--cap", cap_arg, "Samelson degree cap")->capture_default_str();
    };

    int dim = 0, max_dim = 0, index = 0, truncate = 0, n_layer = 0, m_pair = 3;
    std::string expr_arg, morphism_arg;
    bool via_hurewicz = false;
    std::vector<std::string> alpha_flags;

    CLI::App* basis_cmd = app.add_subcommand("basis", "Lyndon basis of one homotopy dimension");
    add_common(basis_cmd);
    basis_cmd->add_option("--dim", dim, "Whitehead dimension")->required();

    CLI::App* table_cmd = app.add_subcommand("rank-table", "ranks and bases per dimension");
    add_common(table_cmd);
    table_cmd->add_option("--max-dim", max_dim, "largest Whitehead dimension")->required();

    CLI::App* reduce_cmd = app.add_subcommand("reduce", "bracket expression to Lyndon normal form");
    add_common(reduce_cmd);
    reduce_cmd->add_option("--expr", expr_arg, "bracket expression")->required();

    CLI::App* prim_cmd =
        app.add_subcommand("primitive-check", "primitivity/decomposability of a tensor expression");
    add_common(prim_cmd);
    prim_cmd->add_option("--expr", expr_arg, "tensor expression in b generators")->required();
    prim_cmd->add_flag("--via-hurewicz", via_hurewicz, "map b_i through its hurewicz lift");

    CLI::App* hur_cmd = app.add_subcommand("hurewicz", "canonical primitive lift of one generator");
    add_common(hur_cmd);
    hur_cmd->add_option("--index", index, "generator index")->required();

    CLI::App* susp_cmd = app.add_subcommand("suspension", "homology suspension of an expression");
    add_common(susp_cmd);
    susp_cmd->add_option("--expr", expr_arg, "tensor expression in b generators")->required();

    CLI::App* aut_cmd = app.add_subcommand("aut-report", "automorphism group of a truncation");
    add_common(aut_cmd);
    aut_cmd->add_option("--truncate", truncate, "top generator index")->required();

    CLI::App* order_cmd = app.add_subcommand("order", "order of a morphism given by images");
    add_common(order_cmd);
    order_cmd->add_option("--morphism", morphism_arg, "semicolon list \"xk -> expr\"")->required();
    order_cmd->add_option("--truncate", truncate, "top generator index")->required();

    CLI::App* nc_cmd = app.add_subcommand("noncommute-witness", "canonical non-commuting pair");
    add_common(nc_cmd);
    nc_cmd->add_option("--m", m_pair, "layer of the first morphism (>= 3)")->required();
    nc_cmd->add_option("--truncate", truncate, "top generator index (default m+1)");

    CLI::App* es_cmd = app.add_subcommand("exact-seq", "layer exact-sequence verification");
    add_common(es_cmd);
    es_cmd->add_option("--n", n_layer, "layer index")->required();
    es_cmd->add_option("--truncate", truncate, "top generator index (default n)");

    CLI::App* snt_cmd = app.add_subcommand("snt-witness", "finite-cokernel witness report");
    add_common(snt_cmd);
    snt_cmd->add_option("--truncate", truncate, "top generator index")->required();
    snt_cmd->add_option("--alpha", alpha_flags, "\"(n,w)=k\" overrides (default all 1)");

    // --config FILE injects key=value lines as flags; explicit command-line
    // flags win over the file
    std::vector<std::string> args(argv + 1, argv + argc);
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] != "--config") continue;
        if (i + 1 >= args.size()) {
            std::cerr << "usage error: --config needs a file path\n";
            return 2;
        }
        std::string path = args[i + 1];
        args.erase(args.begin() + i, args.begin() + i + 2);
        std::ifstream file(path);
        if (!file) {
            std::cerr << "usage error: cannot read config file " << path << "\n";
            return 2;
        }
        std::vector<std::string> extra;
        std::string line;
        while (std::getline(file, line)) {
            if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
            size_t b = line.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            size_t e = line.find_last_not_of(" \t\r");
            line = line.substr(b, e - b + 1);
            size_t eq = line.find('=');
            if (eq == std::string::npos) {
                std::cerr << "usage error: config line without '=': " << line << "\n";
                return 2;
            }
            auto trim = [](std::string s) {
                size_t x = s.find_first_not_of(" \t");
                if (x == std::string::npos) return std::string();
                size_t y = s.find_last_not_of(" \t");
                return s.substr(x, y - x + 1);
            };
            std::string flag = "--" + trim(line.substr(0, eq));
            if (std::find(args.begin(), args.end(), flag) == args.end()) {
                extra.push_back(flag);
                extra.push_back(trim(line.substr(eq + 1)));
            }
        }
        args.insert(args.end(), extra.begin(), extra.end());
        break;
    }

    try {
        std::reverse(args.begin(), args.end());  // CLI11 consumes reversed args
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        SpaceSpec space = parse_space(space_arg);
        if (ring_arg != "z" && ring_arg != "q") throw UsageError("--ring must be z or q");
        RingMode ring = ring_arg == "z" ? RingMode::ZLattice : RingMode::Q;
        if (output_arg != "table" && output_arg != "json")
            throw UsageError("--output must be table or json");
        const bool json_out = output_arg == "json";
        std::ostream& os = std::cout;

        if (*basis_cmd) {
            GeneratorSchedule s = schedule_for(space, count_for_whitehead_dim(space, dim), cap_arg);
            std::vector<std::string> expressions;
            for (const HallBasisElement& b : lyndon_basis(s, dim - 1))
                expressions.push_back(format_basis_element(s, b.word));
            if (json_out) {
                os << dump_json(basis_doc(space, dim, expressions));
            } else {
                for (const std::string& e : expressions) os << e << "\n";
            }
        } else if (*table_cmd) {
            GeneratorSchedule s =
                schedule_for(space, count_for_whitehead_dim(space, max_dim), cap_arg);
            RankTableDoc doc{family_name(space.family), whitehead_rank_table(s, max_dim)};
            if (json_out)
                os << dump_json(to_json(doc));
            else
                print_rank_table(os, doc);
        } else if (*reduce_cmd) {
            BracketExpr e = parse_expr(expr_arg);
            GeneratorSchedule s = schedule_for(space, max_generator_index(e, space), cap_arg);
            LieElement value = reduce(e, s);
            if (json_out)
                os << dump_json(to_json(value));
            else
                os << format_lie(value) << "\n";
        } else if (*prim_cmd) {
            BracketExpr e = parse_expr(expr_arg);
            GeneratorSchedule s = schedule_for(space, max_generator_index(e, space), cap_arg);
            TensorElement value = tensor_from_expr(e, s, via_hurewicz);
            bool prim = is_primitive(value);
            bool decomp = is_decomposable(value);
            if (json_out) {
                Json j;
                j["schema"] = kSchemaTag;
                j["type"] = "primitive_check";
                j["expr"] = expr_arg;
                j["via_hurewicz"] = via_hurewicz;
                j["value"] = format_tensor(value);
                j["primitive"] = prim;
                j["decomposable"] = decomp;
                os << dump_json(j);
            } else {
                os << "primitive: " << (prim ? "true" : "false") << "\n";
                os << "decomposable: " << (decomp ? "true" : "false") << "\n";
            }
        } else if (*hur_cmd) {
            GeneratorSchedule s = schedule_for(space, index, cap_arg);
            TensorElement value = hurewicz(s, index);
            if (json_out)
                os << dump_json(to_json(value));
            else
                os << format_tensor(value) << "\n";
        } else if (*susp_cmd) {
            BracketExpr e = parse_expr(expr_arg);
            GeneratorSchedule s = schedule_for(space, max_generator_index(e, space), cap_arg);
            SuspendedElement value = homology_suspension(tensor_from_expr(e, s, via_hurewicz));
            if (json_out) {
                Json j;
                j["schema"] = kSchemaTag;
                j["type"] = "suspension";
                j["expr"] = expr_arg;
                j["result"] = format_suspended(value);
                Json terms = Json::array();
                for (const auto& [gen, c] : value.terms()) {
                    Json t;
                    t["generator"] = gen;
                    t["whitehead_degree"] = value.whitehead_degree(gen);
                    t["coeff"] = rat_to_string(c);
                    terms.push_back(std::move(t));
                }
                j["terms"] = std::move(terms);
                os << dump_json(j);
            } else {
                os << format_suspended(value) << "\n";
            }
        } else if (*aut_cmd) {
            GeneratorSchedule s = schedule_for(space, truncate, cap_arg);
            TruncatedAlgebra L = truncated_algebra(s, truncate, ring);
            AutReport report = aut_report(L);
            if (json_out)
                os << dump_json(to_json(report));
            else
                print_aut_report(os, report);
        } else if (*order_cmd) {
            GeneratorSchedule s = schedule_for(space, truncate, cap_arg);
            TruncatedAlgebra L = truncated_algebra(s, truncate, ring);
            GradedMorphism f = parse_morphism(L, morphism_arg);
            OrderResult r = order(f);
            if (json_out) {
                Json j;
                j["schema"] = kSchemaTag;
                j["type"] = "order_report";
                j["morphism"] = format_morphism(f);
                j["finite"] = r.finite;
                if (r.finite) {
                    j["order"] = r.order;
                    j["witness"] = nullptr;
                } else {
                    j["order"] = nullptr;
                    Json w;
                    w["kind"] = r.witness_kind == OrderResult::WitnessKind::Scaling
                                    ? "scaling"
                                    : "unipotent_translation";
                    w["generator"] = s.generator(*r.witness_generator).name;
                    w["orbit_delta"] = r.witness_delta ? format_lie(*r.witness_delta) : "";
                    j["witness"] = std::move(w);
                }
                os << dump_json(j);
            } else {
                if (r.finite) {
                    os << "order: " << r.order << "\n";
                } else {
                    os << "order: infinite\n";
                    os << "witness: " << s.generator(*r.witness_generator).name;
                    if (r.witness_delta) os << " moves by " << format_lie(*r.witness_delta);
                    os << "\n";
                }
            }
        } else if (*nc_cmd) {
            if (truncate == 0) truncate = m_pair + 1;
            GeneratorSchedule s = schedule_for(space, truncate, cap_arg);
            TruncatedAlgebra L = truncated_algebra(s, truncate, ring);
            NoncommutingWitness w = noncommuting_witness(L, m_pair);
            if (json_out) {
                Json j;
                j["schema"] = kSchemaTag;
                j["type"] = "noncommute_witness";
                j["m"] = m_pair;
                j["f"] = format_morphism(w.f);
                j["g"] = format_morphism(w.g);
                j["on_generator"] = s.generator(w.on_generator).name;
                j["fg_image"] = format_lie(w.fg_image);
                j["gf_image"] = format_lie(w.gf_image);
                j["discrepancy"] = format_lie(w.discrepancy);
                os << dump_json(j);
            } else {
                os << "f: " << format_morphism(w.f) << "\n";
                os << "g: " << format_morphism(w.g) << "\n";
                os << "f.g(" << s.generator(w.on_generator).name
                   << ") = " << format_lie(w.fg_image) << "\n";
                os << "g.f(" << s.generator(w.on_generator).name
                   << ") = " << format_lie(w.gf_image) << "\n";
                os << "discrepancy: " << format_lie(w.discrepancy) << "\n";
            }
        } else if (*es_cmd) {
            if (truncate == 0) truncate = n_layer;
            GeneratorSchedule s = schedule_for(space, truncate, cap_arg);
            TruncatedAlgebra L = truncated_algebra(s, truncate, ring);
            ExactSequenceReport report = exact_sequence_report(L, n_layer);
            if (json_out) {
                os << dump_json(to_json(report));
            } else {
                os << "layer n = " << report.n << ", kernel rank " << report.kernel_rank << "\n";
                for (const ExactSequenceCheck& c : report.checks)
                    os << (c.pass ? "PASS" : "FAIL") << "  " << c.name << ": " << c.detail << "\n";
                os << (report.all_pass ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
            }
        } else if (*snt_cmd) {
            GeneratorSchedule s = schedule_for(space, truncate, cap_arg);
            TruncatedAlgebra L = truncated_algebra(s, truncate, ring);
            SntReport report = snt_cokernel_witness(L, parse_alpha_flags(L, alpha_flags));
            if (json_out) {
                os << dump_json(to_json(report));
            } else {
                for (const SntLayerReport& layer : report.layers) {
                    os << "layer " << layer.n << ": index " << layer.index
                       << (layer.covered ? "" : " (NOT COVERED)");
                    if (!layer.alphas.empty()) {
                        os << "  [";
                        for (size_t i = 0; i < layer.alphas.size(); ++i) {
                            if (i) os << ", ";
                            os << layer.alphas[i].first << " : " << layer.alphas[i].second;
                        }
                        os << "]";
                    }
                    os << "\n";
                }
                os << "total index: " << report.total_index << "\n";
                os << "cokernel: " << (report.cokernel_finite ? "finite" : "INFINITE") << "\n";
            }
        }
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
