#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ds/parallel.hpp"
#include "ds/specht.hpp"
#include "ds/verify.hpp"

using nlohmann::ordered_json;

namespace {

ds::Word parse_word(const std::string& s) {
    ds::Word w;
    std::string t = s;
    for (char& c : t)
        if (c == ',') c = ' ';
    std::istringstream is(t);
    int v;
    while (is >> v) w.push_back(v);
    if (w.empty()) throw std::invalid_argument("empty word literal");
    return w;
}

// "hook:4,2", "pk:3,2", "diagonal:3", "onevar:3"
ds::IdealSpec parse_ideal(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("ideal literal needs kind:params");
    std::string kind = s.substr(0, colon);
    ds::Word p = parse_word(s.substr(colon + 1));
    if (kind == "hook" && p.size() == 2) return ds::ideal_spec(ds::IdealKind::Hook, p[0], p[1]);
    if (kind == "pk" && p.size() == 2) return ds::ideal_spec(ds::IdealKind::Pk, p[0], p[1]);
    if (kind == "diagonal" && p.size() == 1) return ds::ideal_spec(ds::IdealKind::Diagonal, p[0]);
    if (kind == "onevar" && p.size() == 1) return ds::ideal_spec(ds::IdealKind::Onevar, p[0]);
    throw std::invalid_argument("unknown ideal literal: " + s);
}

// "stembridge:3,2", "ccmu:3,2", "ls:3", "lscc:2,1,1"
ds::SchurSeries parse_formula(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("formula literal needs kind:params");
    std::string kind = s.substr(0, colon);
    ds::Word p = parse_word(s.substr(colon + 1));
    if (kind == "stembridge" && p.size() == 2) return ds::stembridge_series(p[0], p[1]);
    if (kind == "ccmu" && p.size() == 2) return ds::cc_mu_series(p[0], p[1]);
    if (kind == "ls" && p.size() == 1) return ds::lusztig_stanley_series(p[0]);
    if (kind == "lscc") return ds::ls_cocharge_series(ds::Partition(std::vector<int>(p.begin(), p.end())));
    if (kind == "nabla-e3") return ds::nabla_e3_fixture();
    throw std::invalid_argument("unknown formula literal: " + s);
}

struct Options {
    std::string format = "text";
    std::string cache_dir;
    bool json() const { return format == "json"; }
};

void emit_series(const Options& opt, const ds::SchurSeries& s) {
    if (opt.json()) std::cout << s.to_json() << "\n";
    else std::cout << s.to_string() << "\n";
}

void emit_poly(const Options& opt, const ds::Poly& f) {
    if (opt.json()) std::cout << ds::poly_to_json(f) << "\n";
    else std::cout << f.to_string() << "\n";
}

ordered_json dims_json(const std::map<std::pair<int, int>, int>& dims) {
    ordered_json j = ordered_json::object();
    for (auto& [bd, d] : dims)
        j["(" + std::to_string(bd.first) + "," + std::to_string(bd.second) + ")"] = d;
    return j;
}

int run_verify(const Options& opt, const std::vector<std::string>& args) {
    if (args.empty()) throw std::invalid_argument("verify: missing suite name");
    const std::string& suite = args[0];
    auto arg = [&](size_t i) -> int {
        if (args.size() <= i) throw std::invalid_argument("verify " + suite + ": missing argument");
        return std::stoi(args[i]);
    };
    std::vector<ds::VerifyResult> results;
    if (suite == "hook-basis") {
        results.push_back(ds::verify_hook_basis(arg(1), arg(2)));
    } else if (suite == "pk-basis") {
        results.push_back(ds::verify_pk_basis(arg(1), arg(2), args.size() > 3 ? arg(3) : -1));
    } else if (suite == "dr") {
        results.push_back(ds::verify_dr(arg(1)));
    } else if (suite == "bijection") {
        results.push_back(ds::verify_bijection(arg(1)));
    } else if (suite == "degrees") {
        results.push_back(ds::verify_degrees(arg(1)));
    } else if (suite == "apolar") {
        results.push_back(ds::verify_apolar(arg(1)));
    } else if (suite == "psi") {
        results.push_back(ds::verify_psi(arg(1)));
    } else if (suite == "frobenius") {
        results.push_back(ds::verify_frobenius_hooks(arg(1)));
    } else if (suite == "classical") {
        results.push_back(ds::verify_classical(arg(1)));
    } else if (suite == "paper-examples") {
        results.push_back(ds::verify_paper_examples());
    } else {
        throw std::invalid_argument("unknown verify suite: " + suite);
    }
    bool all = true;
    if (opt.json()) {
        ordered_json j = ordered_json::array();
        for (auto& r : results) {
            all = all && r.pass;
            j.push_back({{"name", r.name}, {"pass", r.pass}, {"notes", r.notes}});
        }
        std::cout << j.dump() << "\n";
    } else {
        for (auto& r : results) {
            all = all && r.pass;
            std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << "\n";
            for (auto& n : r.notes) std::cout << "  " << n << "\n";
        }
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with higher Specht polynomials in two variable sets"};
    app.require_subcommand(1);
    Options opt;
    int workers = 0;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--workers", workers, "Worker count (0 = all cores, 1 = serial)");
    app.add_option("--cache-dir", opt.cache_dir, "Directory for Hilbert-table memos");

    // stats
    auto* stats = app.add_subcommand("stats", "Descent/major-index/cocharge statistics");
    std::string stats_tab, stats_word;
    int stats_k = 0;
    stats->add_option("--tableau", stats_tab, "Tableau literal, rows bottom to top: \"1 2 4 / 3 5\"");
    stats->add_option("--word", stats_word, "Word literal: \"2 5 3 1 4\"");
    stats->add_option("-k,--hook-k", stats_k, "Also report the hook mu-cocharge tables for this k");

    // rsk
    auto* rsk = app.add_subcommand("rsk", "RSK insertion tableau of a word");
    std::string rsk_word;
    rsk->add_option("--word", rsk_word)->required();

    // phi
    auto* phicmd = app.add_subcommand("phi", "The maj-to-cocharge bijection on SYT");
    std::string phi_tab;
    phicmd->add_option("--tableau", phi_tab)->required();

    // specht
    auto* spechtcmd = app.add_subcommand("specht", "Specht polynomial of a bijective tableau");
    std::string sp_tab;
    spechtcmd->add_option("--tableau", sp_tab)->required();

    // higher-specht
    auto* hs = app.add_subcommand("higher-specht", "Higher Specht polynomials");
    std::string hs_t, hs_s, hs_c, hs_d;
    int hs_k = 0;
    bool hs_onevar = false;
    hs->add_option("--tableau", hs_t, "T")->required();
    hs->add_option("--pair", hs_s, "S (same shape as T)");
    hs->add_option("-k,--hook-k", hs_k, "Hook parameter for the two-variable-set construction");
    hs->add_option("--xexp", hs_c, "x-exponents in reading order");
    hs->add_option("--yexp", hs_d, "y-exponents in reading order");
    hs->add_flag("--one-variable", hs_onevar, "One-variable construction from cocharge labels");

    // ideal
    auto* idealcmd = app.add_subcommand("ideal", "List the generators of an ideal");
    std::string ideal_lit;
    idealcmd->add_option("ideal", ideal_lit, "hook:n,k | pk:n,k | diagonal:n | onevar:n")->required();

    // hilbert
    auto* hil = app.add_subcommand("hilbert", "Bigraded Hilbert table of a quotient");
    std::string hil_ideal;
    int hil_d1 = -1, hil_d2 = -1;
    bool hil_cert = false;
    hil->add_option("ideal", hil_ideal)->required();
    hil->add_option("--d1", hil_d1, "x-degree bound (rectangle window)");
    hil->add_option("--d2", hil_d2, "y-degree bound (rectangle window)");
    hil->add_flag("--certified", hil_cert,
                  "Scan until a zero antidiagonal certifies completeness (finite quotients)");

    // frobenius
    auto* frob = app.add_subcommand("frobenius", "Schur-indexed bigraded series");
    std::vector<std::string> frob_formulas;
    std::string frob_quot;
    std::vector<std::string> frob_cmp;
    bool frob_swap = false, frob_hilbert = false;
    int frob_d1 = -1, frob_d2 = -1;
    frob->add_option("--formula", frob_formulas,
                     "stembridge:n,k | ccmu:n,k | ls:n | lscc:parts | nabla-e3");
    frob->add_option("--quotient", frob_quot, "Ideal literal; character-level decomposition");
    frob->add_option("--d1", frob_d1, "x-degree bound for --quotient");
    frob->add_option("--d2", frob_d2, "y-degree bound for --quotient");
    frob->add_option("--compare", frob_cmp, "Two series literals (formula or quotient syntax)")
        ->expected(2);
    frob->add_flag("--allow-swap", frob_swap, "Also accept equality after exchanging q and t");
    frob->add_flag("--hilbert", frob_hilbert, "Print dimensions instead of Schur multiplicities");

    // verify
    auto* ver = app.add_subcommand("verify", "Named verification suites");
    std::vector<std::string> ver_args;
    ver->add_option("suite", ver_args,
                    "hook-basis n k | pk-basis n k [bound] | dr n | bijection n | degrees n | "
                    "apolar n | psi n | frobenius n | classical n | paper-examples")
        ->expected(-1);

    // let global flags (--format, --workers, --cache-dir) appear after the subcommand
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (workers != 0) ds::set_worker_count(workers);

        if (*stats) {
            ordered_json j;
            if (!stats_tab.empty()) {
                ds::Tableau T = ds::Tableau::from_string(stats_tab);
                ds::DescentData d = ds::descent_data(T);
                j["tableau"] = T.to_string();
                j["shape"] = T.shape.to_string();
                j["descents"] = std::vector<int>(d.descents.begin(), d.descents.end());
                j["maj"] = d.maj;
                j["des"] = d.des;
                if (T.is_standard() || T.is_semistandard()) {
                    ds::CochargeLabeling cc = ds::cocharge(T.reading_word());
                    j["cocharge"] = cc.total;
                    j["cocharge_labels"] = cc.labels;
                }
                if (stats_k > 0) {
                    ds::MuCochargePair cc = ds::mu_cocharge_tableaux(T, stats_k);
                    j["ccTab"] = cc.cc_tab;
                    j["ccTab_prime"] = cc.cc_tab_prime;
                    j["cc_mu"] = cc.cc_mu;
                    j["cc_mu_prime"] = cc.cc_mu_prime;
                }
            } else if (!stats_word.empty()) {
                ds::Word w = parse_word(stats_word);
                ds::CochargeLabeling cc = ds::cocharge(w);
                j["word"] = w;
                j["cocharge"] = cc.total;
                j["cocharge_labels"] = cc.labels;
                j["subword_ids"] = cc.subword_ids;
            } else {
                throw std::invalid_argument("stats: need --tableau or --word");
            }
            if (opt.json()) std::cout << j.dump() << "\n";
            else
                for (auto& [key, val] : j.items()) std::cout << key << ": " << val.dump() << "\n";
        } else if (*rsk) {
            ds::Tableau P = ds::rsk_insert(parse_word(rsk_word));
            std::cout << (opt.json() ? ordered_json{{"tableau", P.to_string()}}.dump()
                                     : P.to_string())
                      << "\n";
        } else if (*phicmd) {
            ds::Tableau T = ds::Tableau::from_string(phi_tab);
            ds::Tableau U = ds::phi(T);
            if (opt.json()) {
                std::cout << ordered_json{{"tableau", U.to_string()},
                                          {"maj_of_input", ds::descent_data(T).maj},
                                          {"cocharge", ds::cocharge(U.reading_word()).total}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << U.to_string() << "\n";
            }
        } else if (*spechtcmd) {
            emit_poly(opt, ds::specht_poly(ds::Tableau::from_string(sp_tab)));
        } else if (*hs) {
            ds::Tableau T = ds::Tableau::from_string(hs_t);
            if (!hs_c.empty() || !hs_d.empty()) {
                std::vector<int> c(T.size(), 0), d(T.size(), 0);
                if (!hs_c.empty()) c = parse_word(hs_c);
                if (!hs_d.empty()) d = parse_word(hs_d);
                emit_poly(opt, ds::higher_specht(T, c, d));
            } else if (!hs_s.empty() && hs_onevar) {
                emit_poly(opt, ds::aty_higher_specht(T, ds::Tableau::from_string(hs_s)));
            } else if (!hs_s.empty() && hs_k > 0) {
                emit_poly(opt, ds::hook_higher_specht(T, ds::Tableau::from_string(hs_s), hs_k));
            } else {
                throw std::invalid_argument(
                    "higher-specht: need --xexp/--yexp, or --pair with -k or --one-variable");
            }
        } else if (*idealcmd) {
            ds::IdealSpec I = parse_ideal(ideal_lit);
            if (opt.json()) {
                ordered_json j;
                j["ideal"] = I.label;
                ordered_json gens = ordered_json::array();
                for (const ds::Poly& g : I.all_generators())
                    gens.push_back(ordered_json::parse(ds::poly_to_json(g)));
                j["generators"] = gens;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << I.label << "\n";
                for (const ds::Poly& g : I.all_generators()) std::cout << g.to_string() << "\n";
            }
        } else if (*hil) {
            ds::IdealSpec I = parse_ideal(hil_ideal);
            if (!hil_cert && (hil_d1 < 0 || hil_d2 < 0))
                throw std::invalid_argument(
                    "hilbert: give --d1/--d2 bounds or --certified (finite quotients only)");
            std::string cache_key;
            std::map<std::pair<int, int>, int> dims;
            bool loaded = false;
            if (!opt.cache_dir.empty()) {
                cache_key = opt.cache_dir + "/" + I.label + "_" +
                            (hil_cert ? std::string("certified")
                                      : std::to_string(hil_d1) + "x" + std::to_string(hil_d2)) +
                            "_v1.json";
                std::ifstream in(cache_key);
                if (in) {
                    ordered_json j = ordered_json::parse(in);
                    for (auto& [key, val] : j.items()) {
                        int a, b;
                        if (sscanf(key.c_str(), "(%d,%d)", &a, &b) == 2)
                            dims[{a, b}] = val.get<int>();
                    }
                    loaded = true;
                }
            }
            if (!loaded)
                dims = hil_cert ? ds::engine_for(I).hilbert_certified()
                                : ds::hilbert_table(I, hil_d1, hil_d2);
            if (!opt.cache_dir.empty() && !loaded) {
                std::filesystem::create_directories(opt.cache_dir);
                std::ofstream out(cache_key);
                out << dims_json(dims).dump();
            }
            long total = 0;
            for (auto& [bd, d] : dims) total += d;
            ordered_json j{{"ideal", I.label}, {"dims", dims_json(dims)}, {"total", total}};
            if (opt.json()) std::cout << j.dump() << "\n";
            else {
                std::cout << I.label << " total " << total << "\n";
                for (auto& [bd, d] : dims)
                    if (d) std::cout << "  (" << bd.first << "," << bd.second << ") " << d << "\n";
            }
        } else if (*frob) {
            auto series_of = [&](const std::string& lit) {
                if (lit.rfind("hook:", 0) == 0 || lit.rfind("pk:", 0) == 0 ||
                    lit.rfind("diagonal:", 0) == 0 || lit.rfind("onevar:", 0) == 0) {
                    ds::IdealSpec I = parse_ideal(lit);
                    int d1 = frob_d1, d2 = frob_d2;
                    if (d1 < 0 || d2 < 0) {
                        if (!I.finite_dimensional())
                            throw std::invalid_argument(lit + ": give --d1/--d2 bounds");
                        auto dims = ds::engine_for(I).hilbert_certified();
                        d1 = d2 = 0;
                        for (auto& [bd, d] : dims) {
                            d1 = std::max(d1, bd.first);
                            d2 = std::max(d2, bd.second);
                        }
                    }
                    return ds::quotient_frobenius(I, d1, d2);
                }
                return parse_formula(lit);
            };
            if (!frob_cmp.empty()) {
                ds::SchurSeries a = series_of(frob_cmp[0]);
                ds::SchurSeries b = series_of(frob_cmp[1]);
                ds::SeriesCompareReport rep = ds::compare_series(a, b, frob_swap);
                if (opt.json()) {
                    std::cout << ordered_json{{"verdict", rep.verdict()},
                                              {"differences", rep.differences}}
                                     .dump()
                              << "\n";
                } else {
                    std::cout << rep.verdict() << "\n";
                    for (auto& d : rep.differences) std::cout << "  " << d << "\n";
                }
                return (rep.equal || rep.equal_after_swap) ? 0 : 1;
            }
            std::vector<ds::SchurSeries> out;
            for (auto& lit : frob_formulas) out.push_back(series_of(lit));
            if (!frob_quot.empty()) out.push_back(series_of(frob_quot));
            if (out.empty())
                throw std::invalid_argument("frobenius: need --formula, --quotient or --compare");
            for (auto& s : out) {
                if (frob_hilbert) {
                    ordered_json j = dims_json(ds::series_hilbert(s));
                    if (opt.json()) std::cout << j.dump() << "\n";
                    else
                        for (auto& [key, val] : j.items())
                            std::cout << key << ": " << val.dump() << "\n";
                } else {
                    emit_series(opt, s);
                }
            }
        } else if (*ver) {
            return run_verify(opt, ver_args);
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    }
}
