// m1coh: compute SL2(Z) cohomology groups, emit the moduli tables, run the
// verification suites.

#include "m1coh/amalgam.hpp"
#include "m1coh/serialize.hpp"
#include "m1coh/tables.hpp"
#include "m1coh/torsor.hpp"
#include "m1coh/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace m1coh;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RingFlags {
    std::optional<std::uint32_t> mod;
    std::vector<std::uint32_t> invert;

    CoefficientRing ring() const
    {
        if (mod && !invert.empty())
            throw UsageError("--mod and --invert cannot be combined");
        try {
            if (mod)
                return CoefficientRing::prime_field(*mod);
            if (!invert.empty()) {
                std::set<Integer> primes;
                for (auto p : invert)
                    primes.insert(Integer(p));
                return CoefficientRing::localized(primes);
            }
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return CoefficientRing::integers();
    }
};

SymConvention parse_convention(const std::string& s)
{
    if (s == "dual")
        return SymConvention::Dual;
    if (s == "sym")
        return SymConvention::Polynomial;
    throw UsageError("--convention must be dual or sym");
}

Format format_of(const std::string& s)
{
    auto f = parse_format(s);
    if (!f)
        throw UsageError("--format must be md, csv or json");
    return *f;
}

std::string run_sl2z(unsigned k, std::size_t p, const RingFlags& flags, const std::string& convention,
                     const std::string& format, bool primary)
{
    const auto ring = flags.ring();
    const auto g = sl2z_cohomology(k, p, ring, parse_convention(convention));
    const auto rendered = render(g, render_options_for(ring, primary));
    std::ostringstream os;
    switch (format_of(format)) {
    case Format::Json: {
        nlohmann::ordered_json j;
        j["k"] = k;
        j["p"] = p;
        j["ring"] = ring_label(ring);
        j["group"] = to_json(g);
        j["rendered"] = rendered;
        os << j.dump(2) << "\n";
        break;
    }
    case Format::Csv:
        os << "k,p,ring,group\n" << k << "," << p << "," << ring_label(ring) << "," << rendered << "\n";
        break;
    case Format::Markdown:
        os << rendered << "\n";
        break;
    }
    return os.str();
}

// Keep only the last degree column of a moduli table.
Table last_column(Table t)
{
    t.header = {t.header.front(), t.header.back()};
    for (auto& r : t.rows)
        r = {r.front(), r.back()};
    auto last = t.json.back();
    t.json = nlohmann::ordered_json::array({std::move(last)});
    return t;
}

std::string run_table(const std::string& which, unsigned max_k, std::size_t max_p, std::size_t max_n,
                      std::optional<std::size_t> n, const RingFlags& flags, const std::string& convention,
                      const std::string& format, bool primary)
{
    const Format f = format_of(format);
    if (which == "sl2z") {
        if (n)
            throw UsageError("--n applies only to the moduli tables");
        return emit(sl2z_table(max_k, max_p, flags.ring(), parse_convention(convention), primary), f);
    }
    if (flags.mod || !flags.invert.empty())
        throw UsageError("--mod/--invert apply only to the sl2z table");
    const std::size_t top = n.value_or(max_n);
    Table t;
    if (which == "moduli")
        t = moduli_table(top, primary);
    else if (which == "moduli-half")
        t = moduli_half_table(top, primary);
    else
        throw UsageError("table must be one of sl2z, moduli, moduli-half");
    return emit(n ? last_column(std::move(t)) : t, f);
}

std::string run_torsor_demo()
{
    const auto cfg = build_canonical_torsor();
    std::ostringstream os;
    const auto show = [](const Z4Pair& v) { return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")"; };
    os << "M = (Z/4)^2, M* = " << cfg.order_four().size() << " elements of order 4, "
       << cfg.classes().size() << " classes up to sign\n";
    os << "doubling M*/<-1> -> M[2]*:\n";
    for (const auto& [base, fiber] : cfg.fibers()) {
        os << "  " << show(Z4Pair::from_index(base)) << " <-";
        for (int c : fiber)
            os << " +-" << show(Z4Pair::from_index(c));
        os << "\n";
    }
    os << "T (" << cfg.raw_labelings() << " labelings up to swapping the two sections):\n";
    for (std::size_t i = 0; i < cfg.torsor().size(); ++i) {
        os << "  t" << i << " = {";
        for (std::size_t j = 0; j < 3; ++j)
            os << (j ? ", " : "") << "+-" << show(Z4Pair::from_index(cfg.torsor()[i][j]));
        os << "}\n";
    }
    const auto print_perm = [&](const Permutation& p) {
        for (std::size_t i = 0; i < p.size(); ++i)
            os << (i ? " " : "") << "t" << i << "->t" << p[i];
    };
    os << "translations by M[2]:\n";
    for (const auto& m : cfg.two_torsion()) {
        os << "  " << show(m) << ": ";
        print_perm(cfg.translation(m));
        os << "\n";
    }
    const auto w = torsor_nontriviality_witness(cfg);
    os << "[[1,1],[0,1]] acts as ";
    print_perm(w.permutation);
    os << " (cycle type";
    for (auto c : cycle_type(w.permutation))
        os << " " << c;
    os << ")\n";
    os << "dim H^1(GL2(Z/4), (Z/2)^2) = " << h1_one_cocycles(gl2_z4_on_f2_squared()) << "\n";
    os << "H^1(SL2(Z), (Z/2)^2) = " << sl2z_cohomology_module(standard_coefficient_module("f2_squared"), 1) << "\n";
    return os.str();
}

IntegerMatrix parse_matrix(const std::string& s)
{
    std::vector<long> entries;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            entries.push_back(std::stol(item, &used));
            if (item.find_first_not_of(" ", used) != std::string::npos)
                throw UsageError("bad matrix entry '" + item + "'");
        } catch (const std::logic_error&) {
            throw UsageError("bad matrix entry '" + item + "'");
        }
    }
    std::size_t r = 0;
    while (r * r < entries.size())
        ++r;
    if (r == 0 || r * r != entries.size())
        throw UsageError("--matrix needs r*r comma-separated entries, row-major");
    IntegerMatrix m(r, r);
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(i / r, i % r) = entries[i];
    return m;
}

std::string run_cocycles(const std::string& group, std::size_t order, const std::string& matrix, std::uint32_t p)
{
    std::ostringstream os;
    if (group == "gl2z4") {
        const auto G = gl2_z4_on_f2_squared();
        os << "G = GL2(Z/4), |G| = " << G.order() << ", V = (Z/2)^2\n";
        os << "dim H^1(G, V) = " << h1_one_cocycles(G) << "\n";
        return os.str();
    }
    if (group != "cyclic")
        throw UsageError("--group must be gl2z4 or cyclic");
    if (order == 0 || matrix.empty())
        throw UsageError("cyclic cocycles need --order and --matrix");
    const auto g = parse_matrix(matrix);
    try {
        const auto G = cyclic_group_data(order, g, p);
        const auto fast = cyclic_cohomology(CyclicAction(static_cast<unsigned>(order), g, Base::prime_field(p)), 1);
        os << "G = Z/" << order << ", V = F_" << p << "^" << g.rows() << "\n";
        os << "dim H^1(G, V) = " << h1_one_cocycles(G) << " (cocycle solver)\n";
        os << "H^1(G, V) = " << fast << " (periodic resolution)\n";
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return os.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact cohomology of SL2(Z) with symmetric-power coefficients and of the moduli of elliptic curves"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "Write output to this file instead of stdout");

    RingFlags ring;
    std::string format = "md";
    std::string convention = "dual";
    bool primary = false;
    const auto ring_options = [&](CLI::App* sub) {
        sub->add_option("--mod", ring.mod, "Coefficients in F_q for the prime q");
        sub->add_option("--invert", ring.invert, "Invert this prime (repeatable)");
        sub->add_option("--format", format, "md, csv or json")->check(CLI::IsMember({"md", "csv", "json"}));
        sub->add_option("--convention", convention, "M_k as dual (default) or sym, the plain symmetric power")
            ->check(CLI::IsMember({"dual", "sym"}));
        sub->add_flag("--primary", primary, "Print primary decompositions, e.g. Z/4 + Z/3");
    };

    auto* sl2z = app.add_subcommand("sl2z", "Compute H^p(SL2(Z), M_k)");
    unsigned k = 0;
    std::size_t p = 0;
    sl2z->add_option("--k", k, "Weight k of M_k")->required();
    sl2z->add_option("--p", p, "Cohomological degree")->required();
    ring_options(sl2z);

    auto* table = app.add_subcommand("table", "Emit a table: sl2z, moduli or moduli-half");
    std::string which;
    unsigned max_k = 4;
    std::size_t max_p = 7, max_n = 9;
    table->add_option("which", which, "sl2z | moduli | moduli-half")
        ->required()
        ->check(CLI::IsMember({"sl2z", "moduli", "moduli-half"}));
    table->add_option("--max-k", max_k, "Largest weight (sl2z)");
    table->add_option("--max-p", max_p, "Largest degree (sl2z)");
    table->add_option("--max-n", max_n, "Largest degree (moduli tables, at most 9)");
    std::optional<std::size_t> single_n;
    table->add_option("--n", single_n, "Only degree n (moduli tables)");
    ring_options(table);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite = "all";
    std::uint64_t seed = 0;
    verify->add_option("suite", suite, "all | tables | fty | torsor | splitting | periodicity | ptorsion | exterior-square | oracles")
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--seed", seed, "Seed for randomized checks");

    auto* torsor = app.add_subcommand("torsor", "Canonical E[2]-torsor");
    torsor->require_subcommand(1);
    auto* demo = torsor->add_subcommand("demo", "Build the torsor and show its symmetries");

    auto* cocycles = app.add_subcommand("cocycles", "Brute-force H^1 of a finite group");
    std::string group = "gl2z4";
    std::size_t order = 0;
    std::string matrix;
    std::uint32_t cocycle_prime = 2;
    cocycles->add_option("--group", group, "gl2z4 (on (Z/2)^2) or cyclic")->check(CLI::IsMember({"gl2z4", "cyclic"}));
    cocycles->add_option("--order", order, "Order of the cyclic group");
    cocycles->add_option("--matrix", matrix, "Generator action, row-major, comma-separated");
    cocycles->add_option("--mod", cocycle_prime, "Prime field of the coefficients");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    std::string output;
    int status = kOk;
    try {
        if (sl2z->parsed()) {
            output = run_sl2z(k, p, ring, convention, format, primary);
        } else if (table->parsed()) {
            output = run_table(which, max_k, max_p, max_n, single_n, ring, convention, format, primary);
        } else if (verify->parsed()) {
            const auto report = run_suite(suite, seed);
            std::ostringstream os;
            os << report;
            output = os.str();
            status = report.passed() ? kOk : kVerifyFailed;
        } else if (demo->parsed()) {
            output = run_torsor_demo();
        } else if (cocycles->parsed()) {
            output = run_cocycles(group, order, matrix, cocycle_prime);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DegenerationUnproven& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }

    if (out_path.empty()) {
        std::cout << output;
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kUsage;
        }
        f << output;
    }
    return status;
}
