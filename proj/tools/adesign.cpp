// Command-line front end: generation, construction, classification and
// bound computation over the shared file formats.
//
// Exit codes: 0 success, 1 a verified construction failed to match its
// claimed parameters, 2 usage or input errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "adesign/algebra.hpp"
#include "adesign/bounds.hpp"
#include "adesign/builders.hpp"
#include "adesign/graphs.hpp"
#include "adesign/incidence.hpp"
#include "adesign/io.hpp"
#include "adesign/setdiff.hpp"

namespace {

using namespace adesign;

constexpr int kExitOk = 0;
constexpr int kExitClaimMismatch = 1;
constexpr int kExitUsage = 2;

void emit(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

void print_classification_text(const Classification& c) {
    std::cout << to_string(c.verdict);
    if (c.verdict == Verdict::Design || c.verdict == Verdict::Adesign)
        std::cout << ", lambda=" << c.lambda;
    std::cout << ", t=" << c.t << ", v=" << c.v << ", b=" << c.b;
    if (c.k >= 0) std::cout << ", k=" << c.k;
    std::cout << ", r_min=" << c.r_min << ", r_max=" << c.r_max
              << ", count_low=" << c.count_low << ", count_high=" << c.count_high << '\n';
}

void print_construction_text(const ConstructionReport& rep) {
    std::cout << rep.name << ": v=" << rep.structure.points()
              << ", b=" << rep.structure.block_count() << '\n';
    for (std::size_t i = 0; i < rep.claims.size(); ++i) {
        const auto& c = rep.claims[i];
        std::cout << "  claim t=" << c.t << " " << to_string(c.kind) << " (v=" << c.v
                  << ", k=" << c.k << ", lambda=" << c.lambda << ")";
        if (c.degenerate) {
            std::cout << " [skipped: " << (c.note.empty() ? "degenerate" : c.note) << "]\n";
            continue;
        }
        const auto& got = rep.verified[i];
        std::cout << " -> verified " << to_string(got.verdict) << " lambda=" << got.lambda
                  << " r=[" << got.r_min << "," << got.r_max << "]";
        if (!c.note.empty()) std::cout << " (" << c.note << ")";
        std::cout << '\n';
    }
    for (const auto& n : rep.notes) std::cout << "  note: " << n << '\n';
    std::cout << (rep.all_verified() ? "  all claims verified\n"
                                     : "  CLAIM MISMATCH: see verified values above\n");
}

int finish_construction(const ConstructionReport& rep, const std::string& out_path, bool json) {
    if (!out_path.empty()) write_block_file(out_path, rep.structure);
    if (json)
        emit(construction_json(rep));
    else
        print_construction_text(rep);
    return rep.all_verified() ? kExitOk : kExitClaimMismatch;
}

GroupSubset load_subset(const std::string& path) { return read_group_subset_file(path); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct, verify and bound block designs and almost designs"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit JSON instead of text");

    // ---- gen ----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a named graph or tournament");
    std::string gen_kind, gen_out;
    long long gen_q = 0;
    int gen_d = 0;
    gen->add_option("kind", gen_kind, "paley-graph | paley-tournament | latin-square")
        ->required();
    gen->add_option("--q", gen_q, "field order")->required();
    gen->add_option("--d", gen_d, "coordinate count (latin-square)");
    gen->add_option("--out", gen_out, "write the matrix to this file");

    // ---- check --------------------------------------------------------
    auto* check = app.add_subcommand("check", "recognize a matrix read from a file");
    std::string check_kind, check_file;
    check->add_option("kind", check_kind, "srg | drt | conference")->required();
    check->add_option("file", check_file, "matrix file")->required();

    // ---- classify ------------------------------------------------------
    auto* cls = app.add_subcommand("classify", "classify a block file at level t");
    int cls_t = 2;
    std::string cls_file;
    cls->add_option("--t", cls_t, "subset size")->required();
    cls->add_option("file", cls_file, "block file")->required();

    // ---- construct ------------------------------------------------------
    auto* con = app.add_subcommand("construct", "build a named structure and verify it");
    std::string con_name, con_out, con_file;
    long long con_q = 0, con_n = 0, con_row = 0;
    bool con_complementary = false, con_complement = false;
    con->add_option("name", con_name,
                    "paley-union | paley-union-comp | drt-union | drt-union-comp | srg-plus-i | "
                    "srg-pair-union | derived-inf | residual-inf | bose-mod | pair-union-example "
                    "| contraction-cover")
        ->required();
    con->add_option("--q", con_q, "field order");
    con->add_option("--n", con_n, "modulus (bose-mod, pair-union-example)");
    con->add_option("--row", con_row, "row index (derived-inf, residual-inf)");
    con->add_option("--file", con_file, "adjacency matrix file (srg-plus-i)");
    con->add_flag("--complementary", con_complementary, "closed variant (srg-pair-union)");
    con->add_flag("--complement", con_complement, "complement the input graph first");
    con->add_option("--out", con_out, "write the block file here");

    // ---- group subset commands ------------------------------------------
    std::string sub_file, dev_out;
    auto* spectrum = app.add_subcommand("spectrum", "difference spectrum of a group subset");
    spectrum->add_option("file", sub_file, "group subset file")->required();
    auto* isds = app.add_subcommand("is-ds", "difference set test");
    isds->add_option("file", sub_file, "group subset file")->required();
    auto* isads = app.add_subcommand("is-ads", "almost difference set test");
    isads->add_option("file", sub_file, "group subset file")->required();
    auto* ispds = app.add_subcommand("is-pds", "partial difference set test");
    ispds->add_option("file", sub_file, "group subset file")->required();
    auto* dev = app.add_subcommand("dev", "development of a group subset");
    dev->add_option("file", sub_file, "group subset file")->required();
    dev->add_option("--out", dev_out, "write the block file here");

    // ---- bounds / feasibility -------------------------------------------
    auto* bounds_cmd = app.add_subcommand("bounds", "block-count window for a 2-level adesign");
    long long b_v = 0, b_k = 0, b_lambda = 0;
    int b_t = 0;
    bounds_cmd->add_option("--v", b_v)->required();
    bounds_cmd->add_option("--k", b_k)->required();
    bounds_cmd->add_option("--lambda", b_lambda)->required();
    bounds_cmd->add_option("--t", b_t, "also report one-level-down feasibility at this t");

    auto* feas = app.add_subcommand("feasibility", "one-level-down outcomes of an adesign");
    long long f_v = 0, f_k = 0, f_lambda = 0;
    int f_t = 0;
    feas->add_option("--v", f_v)->required();
    feas->add_option("--k", f_k)->required();
    feas->add_option("--t", f_t)->required();
    feas->add_option("--lambda", f_lambda)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            IntMatrix M;
            ordered_json extra;
            if (gen_kind == "paley-graph") {
                M = paley_graph(gen_q);
                extra["field"] = field_json(FiniteField::of_order(gen_q));
                extra["srg"] = srg_params_json(*is_srg(M));
            } else if (gen_kind == "paley-tournament") {
                M = paley_tournament(gen_q);
                extra["field"] = field_json(FiniteField::of_order(gen_q));
                extra["n"] = M.rows();
            } else if (gen_kind == "latin-square") {
                if (gen_d == 0) throw std::invalid_argument("latin-square needs --d");
                M = latin_square_graph(gen_q, gen_d);
                extra["field"] = field_json(FiniteField::of_order(gen_q));
                extra["srg"] = srg_params_json(*is_srg(M));
            } else {
                throw std::invalid_argument("unknown generator: " + gen_kind);
            }
            if (!gen_out.empty()) write_matrix_file(gen_out, M);
            if (json) {
                ordered_json j;
                j["kind"] = gen_kind;
                j["order"] = M.rows();
                for (auto& [k, v] : extra.items()) j[k] = v;
                if (!gen_out.empty()) j["out"] = gen_out;
                emit(j);
            } else {
                std::cout << gen_kind << " of order " << M.rows();
                if (!gen_out.empty())
                    std::cout << " written to " << gen_out;
                else if (gen_out.empty() && M.rows() <= 50) {
                    std::cout << "\n";
                    write_matrix_file(std::cout, M);
                }
                std::cout << '\n';
            }
            return kExitOk;
        }

        if (*check) {
            IntMatrix M = read_matrix_file(check_file);
            ordered_json j;
            j["kind"] = check_kind;
            if (check_kind == "srg") {
                auto p = is_srg(M);
                j["is_srg"] = p.has_value();
                if (p) {
                    j["params"] = srg_params_json(*p);
                    j["paley_type"] = is_paley_type(*p);
                }
            } else if (check_kind == "drt") {
                auto p = is_doubly_regular_tournament(M);
                j["is_doubly_regular"] = p.has_value();
                if (p) {
                    j["n"] = p->n;
                    j["common_out_neighbors"] = p->common_out_neighbors;
                }
            } else if (check_kind == "conference") {
                auto t = is_conference_matrix(M);
                j["type"] = to_string(t);
            } else {
                throw std::invalid_argument("unknown check: " + check_kind);
            }
            if (json)
                emit(j);
            else
                std::cout << j.dump(2) << '\n';
            return kExitOk;
        }

        if (*cls) {
            IncidenceStructure S = read_block_file(cls_file);
            Classification c = classify(S, cls_t);
            if (json) {
                ordered_json j = classification_json(c);
                j["source"] = cls_file;
                emit(j);
            } else {
                print_classification_text(c);
            }
            return kExitOk;
        }

        if (*con) {
            auto need_q = [&]() {
                if (con_q == 0) throw std::invalid_argument(con_name + " needs --q");
                return con_q;
            };
            auto need_n = [&]() {
                if (con_n == 0) throw std::invalid_argument(con_name + " needs --n");
                return con_n;
            };
            if (con_name == "paley-union")
                return finish_construction(paley_union(paley_graph(need_q())), con_out, json);
            if (con_name == "paley-union-comp")
                return finish_construction(paley_union_complementary(paley_graph(need_q())),
                                           con_out, json);
            if (con_name == "drt-union")
                return finish_construction(tournament_union(paley_tournament(need_q())), con_out,
                                           json);
            if (con_name == "drt-union-comp")
                return finish_construction(
                    tournament_union_complementary(paley_tournament(need_q())), con_out, json);
            if (con_name == "srg-plus-i") {
                IntMatrix A;
                if (!con_file.empty())
                    A = read_matrix_file(con_file);
                else
                    A = paley_graph(need_q());
                if (con_complement) A = complement_graph(A);
                return finish_construction(srg_plus_identity(A), con_out, json);
            }
            if (con_name == "srg-pair-union")
                return finish_construction(character_pair_union(need_q(), con_complementary),
                                           con_out, json);
            if (con_name == "derived-inf")
                return finish_construction(derived_at_infinity(paley_graph(need_q()), con_row),
                                           con_out, json);
            if (con_name == "residual-inf")
                return finish_construction(residual_at_infinity(paley_graph(need_q()), con_row),
                                           con_out, json);
            if (con_name == "bose-mod")
                return finish_construction(bose_modified(need_n()), con_out, json);
            if (con_name == "pair-union-example")
                return finish_construction(pair_union_counterexample(need_n()), con_out, json);
            if (con_name == "contraction-cover") {
                CoveringConstruction cc = contraction_minimal_covering(need_q());
                if (!con_out.empty()) write_block_file(con_out, cc.contracted.structure);
                if (json) {
                    emit(covering_construction_json(cc));
                } else {
                    print_construction_text(cc.full);
                    print_construction_text(cc.contracted);
                    std::cout << "covering bound " << cc.covering_bound_value
                              << (cc.horsley_applicable ? " (refined)" : " (classical)")
                              << ", met: " << (cc.meets_bound ? "yes" : "no") << '\n';
                }
                bool ok = cc.full.all_verified() && cc.contracted.all_verified() &&
                          cc.meets_bound;
                return ok ? kExitOk : kExitClaimMismatch;
            }
            throw std::invalid_argument("unknown construction: " + con_name);
        }

        if (*spectrum || *isds || *isads || *ispds || *dev) {
            GroupSubset D = load_subset(sub_file);
            if (*spectrum) {
                DifferenceSpectrum sp = difference_spectrum(D.group, D.elements);
                ordered_json j;
                j["v"] = sp.group_order;
                j["k"] = sp.subset_size;
                ordered_json entries = ordered_json::array();
                for (long long g = 1; g < sp.group_order; ++g) {
                    ordered_json e;
                    e["element"] = D.group.tuple_of(g);
                    e["multiplicity"] = sp.multiplicity[static_cast<std::size_t>(g)];
                    entries.push_back(e);
                }
                j["spectrum"] = entries;
                emit(j);
            } else if (*isds) {
                auto lam = is_difference_set(D.group, D.elements);
                ordered_json j;
                j["is_difference_set"] = lam.has_value();
                if (lam) j["lambda"] = *lam;
                emit(j);
            } else if (*isads) {
                auto ads = is_almost_difference_set(D.group, D.elements);
                ordered_json j;
                j["is_almost_difference_set"] = ads.has_value();
                if (ads) {
                    j["lambda"] = ads->lambda;
                    j["s"] = ads->s;
                    if (ads->s == D.group.order() - 1) {
                        // perfect difference set: both allowed readings
                        j["readings"] = {{{"lambda", ads->lambda}, {"s", ads->s}},
                                         {{"lambda", ads->lambda - 1}, {"s", 0}}};
                    }
                }
                emit(j);
            } else if (*ispds) {
                auto pds = is_partial_difference_set(D.group, D.elements);
                ordered_json j;
                j["is_partial_difference_set"] = pds.has_value();
                if (pds) {
                    j["lambda"] = pds->lambda;
                    j["mu"] = pds->mu;
                }
                emit(j);
            } else {
                IncidenceStructure S = development(D.group, D.elements);
                if (!dev_out.empty()) write_block_file(dev_out, S);
                ordered_json j;
                j["v"] = S.points();
                j["b"] = S.block_count();
                j["translate_collisions"] = S.has_repeated_blocks();
                j["classification_t2"] = classification_json(classify(S, 2));
                emit(j);
            }
            return kExitOk;
        }

        if (*bounds_cmd) {
            BoundReport rep = adesign_block_window(b_v, b_k, b_lambda);
            ordered_json j = bound_report_json(rep);
            if (b_t > 0) j["feasibility"] = feasibility_json(feasibility(b_v, b_k, b_t, b_lambda));
            if (json) {
                emit(j);
            } else {
                std::cout << "window [" << rep.lower << ", " << rep.upper << "] for v=" << rep.v
                          << " k=" << rep.k << " lambda=" << rep.lambda << '\n'
                          << j.dump(2) << '\n';
            }
            return kExitOk;
        }

        if (*feas) {
            emit(feasibility_json(feasibility(f_v, f_k, f_t, f_lambda)));
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
