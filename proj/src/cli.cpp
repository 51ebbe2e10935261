#include "prmhull/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "prmhull/hull_euclid.hpp"
#include "prmhull/hull_herm.hpp"
#include "prmhull/kernels.hpp"
#include "prmhull/prm_codes.hpp"

#ifndef PRMHULL_SOURCE_DIR
#define PRMHULL_SOURCE_DIR "."
#endif

namespace prmhull::cli {

namespace {

using json = nlohmann::json;

template <class Seq>
json strings(const Seq& items) {
    json out = json::array();
    for (const auto& it : items) out.push_back(it.to_string());
    return out;
}

json affine_strings(const std::vector<Monomial>& items) {
    json out = json::array();
    for (const auto& m : items) out.push_back(m.to_string(1));
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::uint32_t square(std::uint32_t q) { return q * q; }

std::string tag_of(const EaqeccParams& p, const std::string& key) {
    auto it = p.tags.find(key);
    return it == p.tags.end() ? "" : provenance_name(it->second);
}

std::string opt(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : ""; }

// Accumulates verification lines and the pass/fail tally.
class Report {
public:
    explicit Report(std::ostream& out) : out_(out) {}

    void check(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) ++failures_;
        out_ << (ok ? "PASS " : "FAIL ") << what << '\n';
    }
    void fail(const std::string& what) { check(false, what); }
    void warn(const std::string& what) {
        ++warnings_;
        out_ << "WARN " << what << '\n';
    }
    void skip(const std::string& what) {
        ++skips_;
        out_ << "SKIP " << what << '\n';
    }
    void line(const std::string& text) { out_ << text << '\n'; }

    int finish(const std::string& scope) const {
        out_ << "verify " << scope << ": " << checks_ << " checks, " << failures_ << " failures, " << warnings_
             << " warnings, " << skips_ << " skipped\n";
        return failures_ == 0 ? kPass : kMismatch;
    }

private:
    std::ostream& out_;
    std::size_t checks_ = 0, failures_ = 0, warnings_ = 0, skips_ = 0;
};

struct Options {
    std::uint64_t cap = kDefaultWeightCap;
    std::string goldens = default_goldens_dir();
};

// params ------------------------------------------------------------------

int cmd_params(std::ostream& out, const Options& o, const std::string& family, std::uint32_t q, unsigned m,
               std::uint32_t d, bool verify) {
    const bool prm = family == "prm";
    const CodeParams p = prm ? prm_params(q, m, d) : rm_params(q, m, d);
    json r;
    r["command"] = "params";
    r["inputs"] = {{"family", family}, {"q", q}, {"m", m}, {"d", d}};
    json outputs = {{"n", p.n}, {"k", p.k}, {"wt", p.wt}};
    if (prm) {
        const PrmDual dd = prm_dual_description(q, m, d);
        outputs["dual"] = {{"degree", dd.dual_degree}, {"plus_all_ones", dd.extra_all_ones}};
    } else if (d < m * (q - 1)) {
        outputs["dual"] = {{"degree", rm_dual_degree(q, m, d)}};
    } else {
        outputs["dual"] = {{"degree", nullptr}, {"zero_code", true}};
    }
    r["outputs"] = outputs;
    r["provenance"] = {{"n", "closed_form"}, {"k", "closed_form"}, {"wt", "closed_form"}};
    int code = kPass;
    if (verify) {
        const Field F = field_of_order(q);
        const LinearCode c = prm ? prm_code(F, m, d) : rm_code(F, m, d);
        json v = {{"k_rank", c.dimension()}};
        bool pass = c.dimension() == p.k && c.length() == p.n;
        try {
            const auto w = min_weight(c, o.cap);
            v["wt_enumerated"] = w;
            pass = pass && w == p.wt;
        } catch (const InfeasibleError&) {
            v["wt_enumerated"] = nullptr;
        }
        v["pass"] = pass;
        r["verify"] = v;
        code = pass ? kPass : kMismatch;
    }
    out << r.dump() << '\n';
    return code;
}

// hull --------------------------------------------------------------------

int cmd_hull_euclid(std::ostream& out, std::uint32_t q, std::uint32_t d1, std::uint32_t d2, bool verify) {
    const Field F = field_of_order(q);
    const EuclidHullBasis b = relative_hull_basis(F, d1, d2);
    if (b.dual_not_prm) throw std::invalid_argument("d2 = q-1: dual is not a PRM code");
    json r;
    r["command"] = "hull euclid";
    r["inputs"] = {{"q", q}, {"d1", b.d1}, {"d2", b.d2}};
    std::string kind = b.congruent_case ? "congruent" : "A1";
    if (!b.congruent_case && !b.part_Y.empty()) kind += "+Y";
    if (b.part_Q) kind += "+Q";
    r["outputs"] = {{"dim", relative_hull_dim(q, b.d1, b.d2)},
                    {"case", kind},
                    {"Y", b.Y},
                    {"basis", strings(b.elements(F))}};
    r["provenance"] = {{"dim", "closed_form"}};
    int code = kPass;
    if (verify) {
        const auto rep = verify_relative_hull(F, b.d1, b.d2);
        r["verify"] = {{"oracle_dim", rep.oracle_dim}, {"spans", rep.basis_spans}, {"pass", rep.ok()}};
        code = rep.ok() ? kPass : kMismatch;
    }
    out << r.dump() << '\n';
    return code;
}

int cmd_hull_hermitian(std::ostream& out, std::uint32_t q, std::uint32_t d, bool verify) {
    const HermDim dim = hermitian_hull_dim(q, d);
    const HermHullBasis b = hermitian_hull_basis(q, d);
    json r;
    r["command"] = "hull hermitian";
    r["inputs"] = {{"q", q}, {"d", d}};
    r["outputs"] = {{"dim", dim.value},
                    {"exactness", exactness_name(dim.exactness)},
                    {"mode", herm_mode_name(b.mode)},
                    {"U_size", b.U.size()},
                    {"V_size", b.V.size()},
                    {"W_size", b.W.size()},
                    {"T", set_T(q, d)},
                    {"basis", {{"U", strings(b.U)}, {"V", strings(b.V)}, {"W", strings(b.W)}, {"A23", strings(b.A23)}}}};
    r["provenance"] = {{"dim", dim.exactness == Exactness::exact ? "closed_form" : "bound"}};
    int code = kPass;
    if (verify) {
        const auto rep = verify_hermitian_hull(q, d);
        r["verify"] = {{"oracle_dim", rep.oracle_dim},
                       {"independent", rep.independent},
                       {"contained", rep.contained},
                       {"tight", rep.spans_or_bound_tight},
                       {"pass", rep.ok()}};
        code = rep.ok() ? kPass : kMismatch;
    }
    out << r.dump() << '\n';
    return code;
}

int cmd_hull_affine(std::ostream& out, std::uint32_t q, std::uint32_t d, bool verify) {
    json r;
    r["command"] = "hull affine-hermitian";
    r["inputs"] = {{"q", q}, {"d", d}};
    r["outputs"] = {{"dim", affine_hermitian_hull_dim(q, d)},
                    {"U_size", affine_u_size(q, d).total},
                    {"self_orthogonal", d + 1 <= 2 * (q - 1)},
                    {"basis", affine_strings(affine_hull_monomials(q, d, d))}};
    r["provenance"] = {{"dim", "closed_form"}, {"U_size", "closed_form"}};
    int code = kPass;
    if (verify) {
        const auto rep = verify_affine_hermitian(q, d);
        r["verify"] = {{"oracle_dim", rep.oracle_dim},
                       {"self_orthogonal", rep.self_orthogonal},
                       {"spans", rep.basis_spans},
                       {"pass", rep.ok()}};
        code = rep.ok() ? kPass : kMismatch;
    }
    out << r.dump() << '\n';
    return code;
}

// table -------------------------------------------------------------------

int cmd_table(std::ostream& out, const std::string& kind, const std::vector<std::uint32_t>& qs, const std::string& format) {
    const bool csv = format == "csv";
    const char* meta = "all admissible degree choices; no Gilbert-Varshamov filter applied";
    if (csv) {
        out << "# " << meta << '\n';
        if (kind == "asym")
            out << "q,d1,d2,n,kappa,delta_x,delta_z,c,pure,provenance\n";
        else
            out << "q,d,n,k,kappa,delta,c,kappa_provenance,delta_provenance,c_provenance\n";
    } else {
        out << json{{"command", "table " + kind}, {"meta", meta}}.dump() << '\n';
    }
    for (auto q : qs) {
        const auto rows = kind == "asym" ? asym_table(q) : kind == "herm" ? herm_table(q) : affine_herm_table(q);
        for (const auto& p : rows) {
            if (!csv) {
                out << to_json(p).dump() << '\n';
            } else if (kind == "asym") {
                out << p.base_q << ',' << p.d1 << ',' << p.d2 << ',' << p.n << ',' << p.kappa << ',' << opt(p.delta_x)
                    << ',' << opt(p.delta_z) << ',' << p.c << ',' << (p.pure ? (*p.pure ? "true" : "false") : "")
                    << ',' << tag_of(p, "c") << '\n';
            } else {
                out << p.base_q << ',' << p.d1 << ',' << p.n << ',' << p.k1 << ',' << p.kappa << ',' << opt(p.delta)
                    << ',' << p.c << ',' << tag_of(p, "kappa") << ',' << tag_of(p, "delta") << ',' << tag_of(p, "c")
                    << '\n';
            }
        }
    }
    return kPass;
}

// verify ------------------------------------------------------------------

void verify_euclid(Report& rep, const std::vector<std::uint32_t>& qs) {
    for (auto q : qs) {
        const Field F = field_of_order(q);
        const std::uint32_t top = 2 * (q - 1);
        std::size_t count = 0, bad = 0;
        for (std::uint32_t d1 = 1; d1 <= top; ++d1)
            for (std::uint32_t d2 = d1; d2 <= top; ++d2) {
                const auto r = verify_relative_hull(F, d1, d2);
                ++count;
                if (!r.ok()) {
                    ++bad;
                    rep.fail("euclid q=" + std::to_string(q) + " d1=" + std::to_string(d1) + " d2=" +
                             std::to_string(d2) + ": formula " + std::to_string(r.formula_dim) + " oracle " +
                             std::to_string(r.oracle_dim) + " spans " + (r.basis_spans ? "yes" : "no"));
                }
            }
        std::size_t duals = 0, dual_bad = 0;
        for (std::uint32_t d1 = 1; d1 <= top; ++d1)
            for (std::uint32_t d2 = 1; d2 <= top; ++d2) {
                if (d2 == q - 1) continue;
                ++duals;
                if (hull_with_dual_dim(q, d1, d2) != hull_with_dual_oracle(F, d1, d2)) {
                    ++dual_bad;
                    rep.fail("euclid q=" + std::to_string(q) + " hull of PRM_" + std::to_string(d1) + " with dual of PRM_" +
                             std::to_string(d2));
                }
            }
        if (bad == 0)
            rep.check(true, "euclid q=" + std::to_string(q) + ": " + std::to_string(count) +
                                " intersections match formula and basis span");
        if (dual_bad == 0)
            rep.check(true, "euclid q=" + std::to_string(q) + ": " + std::to_string(duals) + " hulls with duals match");
    }
}

void verify_hermitian(Report& rep, const std::vector<std::uint32_t>& qs) {
    for (auto q : qs) {
        rep.line("# q d mode closed_form oracle tight");
        for (std::uint32_t d = 1; d + 1 < square(q); ++d) {
            const auto r = verify_hermitian_hull(q, d);
            const std::string id = "hermitian q=" + std::to_string(q) + " d=" + std::to_string(d);
            rep.line("# " + std::to_string(q) + ' ' + std::to_string(d) + ' ' + herm_mode_name(r.mode) + ' ' +
                     std::to_string(r.closed_form.value) + ' ' + std::to_string(r.oracle_dim) + ' ' +
                     (r.spans_or_bound_tight ? "true" : "false"));
            const bool counts = t_size(q, d) == set_T(q, d).size() && t_size_by_branch(q, d) == t_size(q, d) &&
                                static_cast<std::size_t>(u_size(q, d).total) == set_U(q, d).size();
            if (!counts) rep.fail(id + ": |T| or |U| formula differs from enumeration");
            if (!r.ok())
                rep.fail(id + ": closed form " + std::to_string(r.closed_form.value) + " oracle " +
                         std::to_string(r.oracle_dim));
            else if (!r.spans_or_bound_tight)
                rep.warn(id + ": lower bound " + std::to_string(r.closed_form.value) + " below oracle " +
                         std::to_string(r.oracle_dim));
            if (counts && r.ok()) rep.check(true, id);
        }
    }
}

void verify_affine(Report& rep, const std::vector<std::uint32_t>& qs) {
    for (auto q : qs)
        for (std::uint32_t d = 0; d + 1 < square(q); ++d) {
            const auto r = verify_affine_hermitian(q, d);
            const bool boundary = r.self_orthogonal == (d + 1 <= 2 * (q - 1));
            rep.check(r.ok() && boundary, "affine q=" + std::to_string(q) + " d=" + std::to_string(d) + ": dim " +
                                              std::to_string(r.closed_form) + " oracle " + std::to_string(r.oracle_dim));
        }
}

void verify_eaqecc(Report& rep, const Options& o, const std::vector<std::uint32_t>& qs, bool herm) {
    const std::set<std::uint32_t> wanted(qs.begin(), qs.end());
    const auto golden = read_table_csv(read_file(o.goldens + "/table1.csv"));
    std::map<std::uint32_t, std::size_t> matched;
    for (const auto& g : golden) {
        if (!wanted.count(g.q)) continue;
        const auto p = prm_asym_eaqecc(g.q, g.d1, g.d2);
        const TableRow got{g.q, g.d1, g.d2, p.n, p.kappa, *p.delta_x, *p.delta_z, p.c};
        if (got == g) {
            ++matched[g.q];
        } else {
            std::ostringstream s;
            s << "table1 row q=" << g.q << " d1=" << g.d1 << " d2=" << g.d2 << ": expected " << g.n << ','
              << g.kappa << ',' << g.delta_x << ',' << g.delta_z << ',' << g.c << " got " << got.n << ','
              << got.kappa << ',' << got.delta_x << ',' << got.delta_z << ',' << got.c;
            rep.fail(s.str());
        }
    }
    for (auto [q, n] : matched) rep.check(true, "table1 q=" + std::to_string(q) + ": " + std::to_string(n) + " rows match");

    for (auto q : qs) {
        if (q < 3) continue;
        const Field F = field_of_order(q);
        std::size_t count = 0, bad = 0;
        for (const auto& p : asym_table(q)) {
            ++count;
            const auto oracle_c =
                static_cast<std::int64_t>(p.k1) - static_cast<std::int64_t>(hull_with_dual_oracle(F, p.d1, p.d2));
            if (oracle_c != p.c || !p.kappa_consistent() || p.c < 0 || p.kappa < 0) {
                ++bad;
                rep.fail("asym q=" + std::to_string(q) + " d1=" + std::to_string(p.d1) + " d2=" + std::to_string(p.d2) +
                         ": c " + std::to_string(p.c) + " oracle " + std::to_string(oracle_c));
            }
        }
        if (bad == 0) rep.check(true, "asym q=" + std::to_string(q) + ": " + std::to_string(count) + " closed-form c equal the oracle");
    }
    if (!herm) return;

    for (auto q : qs) {
        const bool oracle = q <= 4;
        for (std::uint32_t d = 1; d + 1 < square(q); ++d) {
            const auto p = herm_eaqecc_prm(q, d);
            const std::string id = "herm q=" + std::to_string(q) + " d=" + std::to_string(d) + " " + format_params(p);
            if (!oracle) {
                rep.check(p.kappa_consistent() && p.c >= 0, id + " (closed form only)");
                continue;
            }
            const auto x = herm_eaqecc_prm_oracle(q, d);
            if (tag_of(p, "c") == "bound") {
                rep.check(p.c >= x.c, id + ": c bound vs oracle " + std::to_string(x.c));
                if (p.c != x.c) rep.warn(id + ": c bound not attained");
            } else {
                rep.check(p.c == x.c && p.kappa_consistent(), id + ": oracle c " + std::to_string(x.c));
            }
        }
        for (std::uint32_t d = 0; d + 1 < square(q); ++d) {
            const auto p = herm_eaqecc_rm(q, d);
            const std::string id = "herm-affine q=" + std::to_string(q) + " d=" + std::to_string(d) + " " + format_params(p);
            if (oracle)
                rep.check(p.c == herm_eaqecc_rm_oracle(q, d).c && p.kappa_consistent(), id);
            else
                rep.check(p.kappa_consistent() && p.c >= 0, id + " (closed form only)");
        }
    }

    // Printed parameters of the Hermitian example against n - 2k + c.
    const json ref = json::parse(read_file(o.goldens + "/herm_example.json"));
    const auto rq = ref.at("q").get<std::uint32_t>();
    if (!wanted.count(rq)) return;
    for (const auto& code : ref.at("codes")) {
        const auto d = code.at("d").get<std::uint32_t>();
        const auto p = herm_eaqecc_prm(rq, d);
        const std::string id = "herm example q=" + std::to_string(rq) + " d=" + std::to_string(d);
        rep.check(code.at("n").get<std::uint64_t>() == p.n && code.at("c").get<std::int64_t>() == p.c &&
                      code.at("delta").get<std::uint64_t>() == *p.delta,
                  id + ": n, c and delta bound agree");
        const auto printed = code.at("kappa").get<std::int64_t>();
        if (printed != p.kappa)
            rep.warn(id + ": printed kappa " + std::to_string(printed) + " differs from n - 2k + c = " +
                     std::to_string(p.n) + " - 2*" + std::to_string(p.k1) + " + " + std::to_string(p.c) + " = " +
                     std::to_string(p.kappa) + "; output follows n - 2k + c");
    }
}

void verify_params(Report& rep, const Options& o, const std::vector<std::uint32_t>& qs) {
    for (auto q : qs) {
        const Field F = field_of_order(q);
        for (int fam = 0; fam < 2; ++fam) {
            const bool prm = fam == 0;
            for (std::uint32_t d = prm ? 1 : 0; d <= 2 * (q - 1); ++d) {
                const CodeParams p = prm ? prm_params(q, 2, d) : rm_params(q, 2, d);
                const LinearCode c = prm ? prm_code(F, 2, d) : rm_code(F, 2, d);
                std::string id = std::string(prm ? "prm" : "rm") + " q=" + std::to_string(q) + " d=" + std::to_string(d);
                bool ok = c.dimension() == p.k && c.length() == p.n;
                if (codeword_count(c) <= o.cap) {
                    const auto w = min_weight(c, o.cap);
                    ok = ok && w == p.wt;
                    id += " k=" + std::to_string(p.k) + " wt=" + std::to_string(p.wt) + " (enumerated " + std::to_string(w) + ")";
                } else {
                    id += " k=" + std::to_string(p.k) + " (wt not enumerated)";
                }
                rep.check(ok, id);
            }
        }
    }
}

void verify_purity(Report& rep, const Options& o, const std::vector<std::uint32_t>& qs) {
    for (auto q : qs) {
        const std::uint32_t top = 2 * (q - 1);
        for (std::uint32_t d1 = 1; d1 <= top; ++d1)
            for (std::uint32_t d2 = 1; d2 <= top; ++d2) {
                if (q == 2 ? d1 == d2 : d1 % (q - 1) == d2 % (q - 1)) continue;
                const std::string id = "purity q=" + std::to_string(q) + " d1=" + std::to_string(d1) + " d2=" + std::to_string(d2);
                try {
                    const auto r = purity_probe(q, d1, d2, o.cap);
                    rep.check(r.pure(), id + ": wt " + std::to_string(r.wt_full) + " excluding " +
                                            (r.wt_excluding ? std::to_string(*r.wt_excluding) : std::string("empty")));
                } catch (const InfeasibleError& e) {
                    rep.skip(id + ": " + e.what());
                }
            }
    }
}

void verify_examples(Report& rep, const Options& o) {
    const std::string want = read_file(o.goldens + "/examples_sec3.json");
    const std::string got = examples_text();
    if (want == got) {
        rep.check(true, "examples match " + o.goldens + "/examples_sec3.json");
        return;
    }
    std::istringstream a(want), b(got);
    std::string la, lb;
    std::size_t line = 0;
    while (true) {
        ++line;
        const bool ea = !std::getline(a, la), eb = !std::getline(b, lb);
        if (ea && eb) break;
        if (ea || eb || la != lb) {
            rep.fail("examples differ at line " + std::to_string(line) + ": golden '" + la + "' computed '" + lb + "'");
            return;
        }
    }
    rep.fail("examples differ in trailing bytes");
}

int cmd_verify(std::ostream& out, const Options& o, const std::string& scope, std::vector<std::uint32_t> qs, bool herm) {
    Report rep(out);
    auto list = [&](std::vector<std::uint32_t> dflt) { return qs.empty() ? dflt : qs; };
    const bool all = scope == "all";
    if (all || scope == "euclid") verify_euclid(rep, list({3, 4, 5}));
    if (all || scope == "hermitian") verify_hermitian(rep, list({2, 3}));
    if (all || scope == "affine") verify_affine(rep, list({2, 3}));
    if (all || scope == "eaqecc") verify_eaqecc(rep, o, list(all ? std::vector<std::uint32_t>{3, 4, 5, 9} : std::vector<std::uint32_t>{4, 5, 9}), herm || all);
    if (all || scope == "params") verify_params(rep, o, list({2, 3, 4, 5}));
    if (all || scope == "purity") verify_purity(rep, o, list({3, 4}));
    if (all || scope == "examples") verify_examples(rep, o);
    return rep.finish(scope);
}

// reduce ------------------------------------------------------------------

int cmd_reduce(std::ostream& out, std::uint32_t q, const std::string& text) {
    const Field F = field_of_order(q);
    const SparsePolynomial f = parse_polynomial(text, F);
    json r;
    r["command"] = "reduce";
    r["inputs"] = {{"q", q}, {"poly", f.to_string()}};
    r["outputs"] = {{"normal_form", reduce_mod_IP2(f).to_string()}};
    out << r.dump() << '\n';
    return kPass;
}

}  // namespace

std::string default_goldens_dir() {
    if (const char* env = std::getenv("PRMHULL_GOLDENS")) return env;
    return std::string(PRMHULL_SOURCE_DIR) + "/goldens";
}

nlohmann::json to_json(const EaqeccParams& p) {
    json r;
    r["construction"] = p.construction;
    r["q"] = p.base_q;
    const bool herm = p.construction.rfind("herm", 0) == 0;
    if (herm) {
        r["field_size"] = p.base_q * p.base_q;
        r["d"] = p.d1;
        r["k"] = p.k1;
    } else {
        r["d1"] = p.d1;
        r["d2"] = p.d2;
        r["k1"] = p.k1;
        r["k2"] = p.k2;
    }
    r["n"] = p.n;
    r["kappa"] = p.kappa;
    r["c"] = p.c;
    if (p.delta) {
        r["delta"] = *p.delta;
    } else if (!herm) {
        r["delta_x"] = p.delta_x ? json(*p.delta_x) : json(nullptr);
        r["delta_z"] = p.delta_z ? json(*p.delta_z) : json(nullptr);
    }
    r["pure"] = p.pure ? json(*p.pure) : json(nullptr);
    json tags = json::object();
    for (const auto& [k, v] : p.tags) tags[k] = provenance_name(v);
    r["provenance"] = tags;
    r["params"] = format_params(p);
    if (!p.note.empty()) r["note"] = p.note;
    return r;
}

nlohmann::json examples_record() {
    json g;
    {
        const Field F = field_of_order(4);
        const auto pts = projective_points(F, 2);
        const auto basis = relative_hull_basis(F, 4, 5);
        g["running1"] = {{"q", 4}, {"d1", 4}, {"d2", 5}, {"A1", strings(basis_Ad(4, 4).A1)}};

        json ids = json::array();
        for (auto a2 : basis.Y) {
            const auto [lhs, rhs] = y_identity(F, 4, 5, a2);
            ids.push_back({{"a2", a2},
                           {"lhs", lhs.to_string()},
                           {"rhs", rhs.to_string()},
                           {"hold", evaluate(lhs, pts) == evaluate(rhs, pts)}});
        }
        g["running2"] = {{"q", 4}, {"d1", 4}, {"d2", 5}, {"Y", basis.Y}, {"monomials", strings(basis.part_Y)}, {"identities", ids}};

        const auto Q = q_polynomial(F, 4, 5);
        g["running3"] = {{"q", 4},
                         {"d1", 4},
                         {"d2", 5},
                         {"Q", Q.q.to_string()},
                         {"Q_companion", Q.companion.to_string()},
                         {"same_evaluation", evaluate(Q.q, pts) == evaluate(Q.companion, pts)}};

        const auto rep = verify_relative_hull(F, 4, 5);
        g["running4"] = {{"q", 4},
                         {"d1", 4},
                         {"d2", 5},
                         {"basis", strings(basis.elements(F))},
                         {"dim", rep.oracle_dim},
                         {"spans_intersection", rep.basis_spans}};
    }
    {
        const std::uint32_t q = 3, d = 7;
        const auto A1 = basis_Ad(square(q), d).A1;
        const auto U = set_U(q, d);
        std::set<std::string> in_u;
        for (const auto& m : U) in_u.insert(m.to_string());
        json excluded = json::array();
        for (const auto& m : A1)
            if (!in_u.count(m.to_string())) excluded.push_back(m.to_string());
        g["runningh1"] = {{"q", q}, {"d", d}, {"A1_size", A1.size()}, {"U_size", U.size()}, {"excluded", excluded}};
        g["runningh2"] = {{"q", q}, {"d", d}, {"T", set_T(q, d)}, {"V", strings(set_V(q, d))}, {"W", strings(set_W(q, d))}};
        const auto digits = qadic(d, q);
        g["runningh3"] = {{"q", q}, {"d", d}, {"beta0", digits.low}, {"beta1", digits.high}, {"T_size", t_size(q, d)}};
        const auto rep = verify_hermitian_hull(q, d);
        g["hermitian_final"] = {{"q", q},
                                {"d", d},
                                {"U_size", rep.size_U},
                                {"V_size", rep.size_V},
                                {"W_size", rep.size_W},
                                {"hull_dim", rep.oracle_dim},
                                {"bound_tight", rep.spans_or_bound_tight}};
    }
    return g;
}

std::string examples_text() { return examples_record().dump(2) + "\n"; }

std::vector<TableRow> read_table_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool header = true;
    std::vector<TableRow> rows;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (header) {
            if (line.rfind("q,d1,d2,n,kappa,delta_x,delta_z,c", 0) != 0) throw std::runtime_error("unexpected table header: " + line);
            header = false;
            continue;
        }
        std::istringstream ls(line);
        std::string cell;
        std::vector<long long> v;
        while (v.size() < 8 && std::getline(ls, cell, ',')) v.push_back(std::stoll(cell));
        if (v.size() != 8) throw std::runtime_error("short table row: " + line);
        rows.push_back({static_cast<std::uint32_t>(v[0]), static_cast<std::uint32_t>(v[1]), static_cast<std::uint32_t>(v[2]),
                        static_cast<std::uint64_t>(v[3]), v[4], static_cast<std::uint64_t>(v[5]),
                        static_cast<std::uint64_t>(v[6]), v[7]});
    }
    return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hulls of projective Reed-Muller codes on P^2 and the entanglement-assisted quantum codes built from them"};
    app.name("prmhull");
    app.require_subcommand(1);
    Options o;
    app.add_option("--cap", o.cap, "Enumeration budget for minimum weights")->capture_default_str();
    app.add_option("--goldens", o.goldens, "Directory with golden files")->capture_default_str();

    std::function<int()> action;

    auto* params = app.add_subcommand("params", "Length, dimension, minimum distance and dual of PRM/RM codes");
    std::string family;
    std::uint32_t q = 0, d = 0, d1 = 0, d2 = 0;
    unsigned m = 2;
    bool verify_flag = false;
    params->add_option("family", family)->required()->check(CLI::IsMember({"prm", "rm"}));
    params->add_option("--q", q)->required();
    params->add_option("--m", m)->capture_default_str();
    params->add_option("--d", d)->required();
    params->add_flag("--verify", verify_flag, "Check against the generator matrix");
    params->callback([&] { action = [&] { return cmd_params(out, o, family, q, m, d, verify_flag); }; });

    auto* hull = app.add_subcommand("hull", "Hull dimension and basis");
    std::string hull_kind;
    hull->add_option("kind", hull_kind)->required()->check(CLI::IsMember({"euclid", "hermitian", "affine-hermitian"}));
    hull->add_option("--q", q)->required();
    hull->add_option("--d", d, "degree (hermitian, affine-hermitian)");
    hull->add_option("--d1", d1, "first degree (euclid)");
    hull->add_option("--d2", d2, "second degree (euclid)");
    hull->add_flag("--verify", verify_flag, "Compare with the linear-algebra oracle");
    hull->callback([&] {
        if (hull_kind == "euclid" && (d1 == 0 || d2 == 0)) throw CLI::ValidationError("hull euclid needs --d1 and --d2");
        if (hull_kind != "euclid" && hull->count("--d") == 0) throw CLI::ValidationError("hull " + hull_kind + " needs --d");
        action = [&] {
            if (hull_kind == "euclid") return cmd_hull_euclid(out, q, d1, d2, verify_flag);
            if (hull_kind == "hermitian") return cmd_hull_hermitian(out, q, d, verify_flag);
            return cmd_hull_affine(out, q, d, verify_flag);
        };
    });

    auto* table = app.add_subcommand("table", "Parameter tables of the quantum codes");
    std::string table_kind, format = "json";
    std::vector<std::uint32_t> qs;
    table->add_option("kind", table_kind)->required()->check(CLI::IsMember({"asym", "herm", "affine-herm"}));
    table->add_option("--q", qs)->required()->delimiter(',');
    table->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    table->callback([&] { action = [&] { return cmd_table(out, table_kind, qs, format); }; });

    auto* verify = app.add_subcommand("verify", "Formula-versus-oracle sweeps");
    std::string scope;
    bool herm = false;
    verify->add_option("scope", scope)
        ->required()
        ->check(CLI::IsMember({"euclid", "hermitian", "affine", "eaqecc", "params", "purity", "examples", "all"}));
    verify->add_option("--q", qs)->delimiter(',');
    verify->add_flag("--herm", herm, "Include the Hermitian constructions (eaqecc)");
    verify->callback([&] { action = [&] { return cmd_verify(out, o, scope, qs, herm); }; });

    auto* reduce = app.add_subcommand("reduce", "Normal form of a polynomial modulo I(P^2)");
    std::string poly;
    reduce->add_option("--q", q)->required();
    reduce->add_option("--poly", poly)->required();
    reduce->callback([&] { action = [&] { return cmd_reduce(out, q, poly); }; });

    auto* golden = app.add_subcommand("golden", "Print a golden document");
    std::string golden_kind;
    golden->add_option("kind", golden_kind)->required()->check(CLI::IsMember({"examples"}));
    golden->callback([&] { action = [&] { out << examples_text(); return kPass; }; });

    auto* info = app.add_subcommand("info", "Kernel backend and thread count");
    info->callback([&] {
        action = [&] {
            out << json{{"kernel", std::string(kernels::isa_name(kernels::active().isa))}, {"threads", worker_threads()}}.dump()
                << '\n';
            return kPass;
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kPass : kUsage;
    }
    try {
        return action ? action() : kUsage;
    } catch (const InfeasibleError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kMismatch;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace prmhull::cli
