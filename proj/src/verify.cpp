#include "poltan/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

#include "poltan/determinantal.hpp"
#include "poltan/polarize.hpp"
#include "poltan/tangent.hpp"
#include "poltan/trees.hpp"

namespace poltan {

int default_jobs(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("POLTAN_JOBS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    const int used = std::min<std::size_t>(jobs, count);
    workers.reserve(used);
    for (int w = 0; w < used; ++w)
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
    for (auto& t : workers) t.join();
}

namespace {

struct Runner {
    std::vector<CheckRow>& rows;
    int jobs;

    // fn returns (computed, match); expected is display-only.
    void run(const std::string& name, const std::string& expected,
             const std::function<std::pair<std::string, bool>()>& fn) {
        CheckRow row;
        row.name = name;
        row.expected = expected;
        const auto start = std::chrono::steady_clock::now();
        try {
            auto [computed, match] = fn();
            row.computed = std::move(computed);
            row.match = match;
        } catch (const std::exception& e) {
            row.computed = std::string("error: ") + e.what();
            row.match = false;
        }
        row.millis =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        rows.push_back(std::move(row));
    }
};

std::string fmt_ll(long long v) { return std::to_string(v); }

// ---- criterion 1: box tangent dimension vs the component formula ----

void check_box_dimension(Runner& r, int n, int d, long long frozen) {
    std::ostringstream name;
    name << "c1 box dimension n=" << n << " d=" << d;
    const long long formula = determinantal_component_dim(n, d);
    const std::string expected = frozen >= 0 ? fmt_ll(frozen) : fmt_ll(formula);
    r.run(name.str(), expected + " (tangent = formula)", [=]() {
        const long long dim = tangent_dimension(box_polarization(n, d));
        const bool ok = dim == formula && (frozen < 0 || dim == frozen);
        return std::make_pair("tangent=" + fmt_ll(dim) + " formula=" + fmt_ll(formula), ok);
    });
}

// ---- criterion 2: deformations of the standard polarization ----

void check_standard_extra(Runner& r, int n, int d, long long extra) {
    std::ostringstream name;
    name << "c2 standard non-variable deformations n=" << n << " d=" << d;
    r.run(name.str(), fmt_ll(extra), [=]() {
        const MonomialIdeal p = standard_polarization(n, d);
        const long long dim = tangent_dimension(p);
        const long long vars = variable_deformation_dim(p);
        return std::make_pair("tangent=" + fmt_ll(dim) + " variable=" + fmt_ll(vars),
                              dim - vars == extra);
    });
}

// ---- criterion 3: P_{2d} is the box ideal after reversing one row ----

void check_two_row_iso(Runner& r, int d) {
    std::ostringstream name;
    name << "c3 standard equals box after row reversal n=2 d=" << d;
    r.run(name.str(), "generators map onto box; equal tangent dimensions", [=]() {
        const MonomialIdeal p = standard_polarization(2, d);
        const MonomialIdeal b = box_polarization(2, d);
        std::vector<int> rename(2 * d);
        for (int j = 1; j <= d; ++j) {
            rename[split_index(1, j, d)] = split_index(1, j, d);
            rename[split_index(2, j, d)] = split_index(2, d - j + 1, d);
        }
        std::vector<Monomial> mapped;
        for (const auto& g : p.generators) mapped.push_back(g.rename(rename));
        const bool gens_match = minimalize(mapped, p.universe).generators == b.generators;
        const long long tp = tangent_dimension(p);
        const long long tb = tangent_dimension(b);
        return std::make_pair(std::string(gens_match ? "generators match" : "generators differ") +
                                  ", tangent " + fmt_ll(tp) + " vs " + fmt_ll(tb),
                              gens_match && tp == tb);
    });
}

// ---- criterion 4: tree sweeps, solver vs prediction ----

struct TreeResult {
    bool match = false;
    std::vector<int> prufer;
};

void check_tree_sweep(Runner& r, int n) {
    std::ostringstream name;
    name << "c4 tree sweep n=" << n;
    const int jobs = r.jobs;
    r.run(name.str(), "all trees: tangent = (3n-4)(n-1) + index", [=]() {
        const auto seqs = all_prufer_sequences(n);
        std::vector<TreeResult> results(seqs.size());
        parallel_for(seqs.size(), jobs, [&](std::size_t i) {
            const LabeledTree tree = prufer_decode(seqs[i]);
            results[i].prufer = seqs[i];
            results[i].match =
                tangent_dimension(tree_ideal(tree).ideal) == predicted_tangent_dim(tree);
        });
        long long good = 0;
        std::string first_bad;
        for (const auto& res : results) {
            if (res.match)
                ++good;
            else if (first_bad.empty()) {
                first_bad = " first mismatch prufer=(";
                for (std::size_t k = 0; k < res.prufer.size(); ++k)
                    first_bad += (k ? "," : "") + std::to_string(res.prufer[k]);
                first_bad += ")";
            }
        }
        return std::make_pair(fmt_ll(good) + "/" + fmt_ll(seqs.size()) + " match" + first_bad,
                              good == static_cast<long long>(seqs.size()));
    });
}

void check_named_seven_tree(Runner& r, const std::string& label, const LabeledTree& tree,
                            long long frozen_index) {
    r.run("c4 tree n=7 " + label, "index=" + fmt_ll(frozen_index) + ", tangent = prediction", [=]() {
        const long long index = tree_index(tree).index;
        const long long predicted = predicted_tangent_dim(tree);
        const long long dim = tangent_dimension(tree_ideal(tree).ideal);
        return std::make_pair("index=" + fmt_ll(index) + " tangent=" + fmt_ll(dim) + " predicted=" +
                                  fmt_ll(predicted),
                              index == frozen_index && dim == predicted);
    });
}

std::vector<std::vector<int>> sample_prufer(int n, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> out(count);
    for (auto& seq : out) {
        seq.resize(n - 2);
        for (auto& s : seq) s = 1 + static_cast<int>(rng() % n);
    }
    return out;
}

void check_tree_sample_seven(Runner& r, std::uint64_t seed) {
    const int jobs = r.jobs;
    r.run("c4 tree n=7 random sample", "100 seeded trees: tangent = prediction", [=]() {
        const auto seqs = sample_prufer(7, 100, seed);
        std::vector<char> ok(seqs.size(), 0);
        parallel_for(seqs.size(), jobs, [&](std::size_t i) {
            const LabeledTree tree = prufer_decode(seqs[i]);
            ok[i] = tangent_dimension(tree_ideal(tree).ideal) == predicted_tangent_dim(tree);
        });
        const long long good = std::count(ok.begin(), ok.end(), 1);
        return std::make_pair(fmt_ll(good) + "/" + fmt_ll(seqs.size()) + " match",
                              good == static_cast<long long>(seqs.size()));
    });
}

// ---- criterion 5: the printed 5-vertex example ----

LabeledTree worked_example_tree() { return make_tree(5, {{1, 2}, {2, 3}, {3, 4}, {3, 5}}); }

void check_worked_example(Runner& r) {
    r.run("c5 worked example generators", "the ten displayed generators, in order", [] {
        const TreeIdeal t = tree_ideal(worked_example_tree());
        const std::vector<std::string> expected = {
            "x_{1,1}*x_{2,1}", "x_{1,1}*x_{3,2}", "x_{1,1}*x_{4,3}", "x_{1,1}*x_{5,4}",
            "x_{2,2}*x_{3,2}", "x_{2,2}*x_{4,3}", "x_{2,2}*x_{5,4}", "x_{3,3}*x_{4,3}",
            "x_{3,4}*x_{5,4}", "x_{4,3}*x_{5,4}"};
        std::vector<std::string> got;
        for (const auto& g : t.ideal.generators) got.push_back(g.str(t.ideal.universe));
        std::string shown;
        for (const auto& s : got) shown += (shown.empty() ? "" : ", ") + s;
        return std::make_pair(shown, got == expected);
    });
    r.run("c5 worked example index", "5", [] {
        const auto report = tree_index(worked_example_tree());
        return std::make_pair("nu1=" + fmt_ll(report.nu1) + " nu2=" + fmt_ll(report.nu2) +
                                  " index=" + fmt_ll(report.index),
                              report.index == 5 && report.nu1 == 1 && report.nu2 == 2);
    });
}

// ---- criterion 6: initial-ideal certification ----

void check_initial_ideal(Runner& r, int n, int d) {
    std::ostringstream name;
    name << "c6 initial ideal n=" << n << " d=" << d;
    r.run(name.str(), "leading terms = box generators; graded ranks agree to d+3", [=]() {
        const auto report = verify_initial_ideal(n, d, d + 3);
        std::string detail = report.leading_terms_match ? "leading terms ok" : "leading terms differ";
        for (const auto& deg : report.degrees)
            if (!deg.match)
                detail += "; degree " + std::to_string(deg.degree) + ": " + fmt_ll(deg.computed) +
                          " != " + fmt_ll(deg.expected);
        return std::make_pair(detail, report.ok);
    });
}

// ---- criterion 7: flat families for the standard polarization, n = 3 ----

std::array<Rational, 3> sample_triple(std::mt19937_64& rng) {
    static const Rational pool[] = {Rational(1),  Rational(-1), Rational(1, 2), Rational(-1, 2),
                                    Rational(2),  Rational(-2), Rational(3),    Rational(-3)};
    return {pool[rng() % 8], pool[rng() % 8], pool[rng() % 8]};
}

void check_flat_family(Runner& r, int d, std::uint64_t seed) {
    {
        std::ostringstream name;
        name << "c7 flat family d=" << d << " t=0";
        r.run(name.str(), "graded ranks agree to degree 6", [=]() {
            const auto report = verify_flat_family(d, {Rational(0), Rational(0), Rational(0)}, 6);
            return std::make_pair(report.ok ? "all degrees match" : "mismatch", report.ok);
        });
    }
    std::ostringstream name;
    name << "c7 flat family d=" << d << " seeded parameters";
    const int jobs = r.jobs;
    r.run(name.str(), "5/5 nonzero triples flat to degree 6", [=]() {
        std::mt19937_64 rng(seed + d);
        std::vector<std::array<Rational, 3>> triples;
        for (int i = 0; i < 5; ++i) triples.push_back(sample_triple(rng));
        std::vector<char> ok(triples.size(), 0);
        parallel_for(triples.size(), jobs,
                     [&](std::size_t i) { ok[i] = verify_flat_family(d, triples[i], 6).ok; });
        std::string detail;
        for (std::size_t i = 0; i < triples.size(); ++i) {
            detail += (i ? " " : "t: ");
            detail += "(" + to_string(triples[i][0]) + "," + to_string(triples[i][1]) + "," +
                      to_string(triples[i][2]) + (ok[i] ? ")" : ")!");
        }
        const long long good = std::count(ok.begin(), ok.end(), 1);
        return std::make_pair(fmt_ll(good) + "/5 flat; " + detail, good == 5);
    });
}

// ---- criterion 8: polarization certification ----

void check_polarizations(Runner& r, bool include_33) {
    r.run("c8 polarization box and standard", include_33 ? "8/8 certified" : "6/6 certified", [=]() {
        long long good = 0, total = 0;
        std::string bad;
        for (int n = 2; n <= 3; ++n)
            for (int d = 2; d <= 3; ++d) {
                if (!include_33 && n == 3 && d == 3) continue;
                const MonomialIdeal base = power_ideal(n, d);
                const auto spec = split_depolarization(n, d);
                for (const auto* kind : {"box", "standard"}) {
                    const MonomialIdeal ideal = kind == std::string("box")
                                                    ? box_polarization(n, d)
                                                    : standard_polarization(n, d);
                    ++total;
                    if (is_polarization(ideal, base, spec).ok)
                        ++good;
                    else
                        bad += std::string(" ") + kind + "(" + std::to_string(n) + "," +
                               std::to_string(d) + ")";
                }
            }
        return std::make_pair(fmt_ll(good) + "/" + fmt_ll(total) + " certified" + bad, good == total);
    });

    r.run("c8 polarization trees n<=5", "144/144 certified", [&]() {
        long long good = 0, total = 0;
        for (int n = 3; n <= 5; ++n) {
            const MonomialIdeal base = sqfree_power_ideal(n - 1, 2);
            for (const auto& seq : all_prufer_sequences(n)) {
                const TreeIdeal t = tree_ideal(prufer_decode(seq));
                ++total;
                if (is_polarization(t.ideal, base, t.spec).ok) ++good;
            }
        }
        return std::make_pair(fmt_ll(good) + "/" + fmt_ll(total) + " certified", good == 144);
    });

    r.run("c8 polarization mutant rejected", "false (wrong copy on one generator)", [] {
        // Swap the second variable of the last generator of the standard
        // polarization from copy (3,2) to (2,2).
        const MonomialIdeal p = standard_polarization(3, 2);
        std::vector<Monomial> gens = p.generators;
        const Monomial bad_gen =
            Monomial::variable(split_index(3, 1, 2)) * Monomial::variable(split_index(2, 2, 2));
        const Monomial vertex =
            Monomial::variable(split_index(3, 1, 2)) * Monomial::variable(split_index(3, 2, 2));
        std::replace(gens.begin(), gens.end(), vertex, bad_gen);
        const auto report =
            is_polarization(minimalize(gens, p.universe), power_ideal(3, 2), split_depolarization(3, 2));
        return std::make_pair(report.ok ? "certified" : "rejected: " + report.detail, !report.ok);
    });
}

// ---- criterion 9: extremal trees ----

void check_star_minimizes(Runner& r, int n) {
    std::ostringstream name;
    name << "c9 star minimizes prediction n=" << n;
    r.run(name.str(), "min over all trees attained by the star", [=]() {
        long long best = -1;
        for (const auto& seq : all_prufer_sequences(n)) {
            const long long value = predicted_tangent_dim(prufer_decode(seq));
            if (best < 0 || value < best) best = value;
        }
        const long long star = predicted_tangent_dim(star_tree(n));
        return std::make_pair("min=" + fmt_ll(best) + " star=" + fmt_ll(star), best == star);
    });
}

void check_path_below_spider(Runner& r) {
    r.run("c9 path below spider n=7", "tangent(path) < tangent(spider)", [] {
        const long long path_dim = tangent_dimension(tree_ideal(path_tree(7)).ideal);
        const long long spider_dim = tangent_dimension(tree_ideal(spider_tree_7()).ideal);
        return std::make_pair("path=" + fmt_ll(path_dim) + " spider=" + fmt_ll(spider_dim),
                              path_dim < spider_dim);
    });
}

}  // namespace

RunReport verify_all(Profile profile, std::uint64_t seed, int jobs, bool exhaustive7) {
    const bool full = profile == Profile::Full;
    RunReport report;
    report.profile = full ? "full" : "quick";
    report.seed = seed;
    report.jobs = default_jobs(jobs);

    Runner r{report.rows, report.jobs};

    check_box_dimension(r, 2, 2, 12);
    check_box_dimension(r, 3, 2, 29);
    check_box_dimension(r, 2, 3, 48);
    if (full) {
        check_box_dimension(r, 4, 2, -1);
        check_box_dimension(r, 3, 3, -1);
    }

    check_standard_extra(r, 3, 2, 3);
    if (full) {
        check_standard_extra(r, 3, 3, 3);
        check_standard_extra(r, 4, 2, 0);
    }

    check_two_row_iso(r, 2);
    check_two_row_iso(r, 3);
    if (full) check_two_row_iso(r, 4);

    check_tree_sweep(r, 3);
    check_tree_sweep(r, 4);
    check_tree_sweep(r, 5);
    if (full) {
        check_tree_sweep(r, 6);
        check_named_seven_tree(r, "path", path_tree(7), 14);
        check_named_seven_tree(r, "spider", spider_tree_7(), 15);
        check_tree_sample_seven(r, seed);
        if (exhaustive7) check_tree_sweep(r, 7);
    }

    check_worked_example(r);

    check_initial_ideal(r, 2, 2);
    check_initial_ideal(r, 3, 2);
    check_initial_ideal(r, 2, 3);
    if (full) check_initial_ideal(r, 3, 3);

    check_flat_family(r, 2, seed);
    if (full) check_flat_family(r, 3, seed);

    check_polarizations(r, full);

    check_star_minimizes(r, 5);
    if (full) {
        check_star_minimizes(r, 6);
        check_path_below_spider(r);
    }

    std::sort(report.rows.begin(), report.rows.end(),
              [](const CheckRow& a, const CheckRow& b) { return a.name < b.name; });
    report.pass = std::all_of(report.rows.begin(), report.rows.end(),
                              [](const CheckRow& row) { return row.match; });
    return report;
}

}  // namespace poltan
