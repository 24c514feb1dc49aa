// Searches small triangulations of the square for the two examples that are
// only given as pictures: the 8-triangle dissection that cannot be deformed to
// an equidissection, and the 10-triangle dissection whose Monsky polynomial is
// not positive. Matches are written as documents, with a positive drawing
// attached when one is found.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <bit>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <set>

#include <sys/wait.h>
#include <unistd.h>

#include "monsky/monsky.hpp"

using namespace monsky;

namespace {

using Tri = std::array<int, 3>;
using Complex = std::vector<Tri>; // vertices 0..3 are p, q, r, s

Tri rotate_min(Tri t) {
    while (t[0] > t[1] || t[0] > t[2]) t = {t[1], t[2], t[0]};
    return t;
}

// Smallest relabelling of the interior vertices, as a sorted triangle list.
Complex canonical(const Complex &c, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n - 4));
    std::iota(perm.begin(), perm.end(), 4);
    Complex best;
    do {
        Complex m;
        for (auto t : c) {
            for (auto &v : t)
                if (v >= 4) v = perm[static_cast<std::size_t>(v - 4)];
            m.push_back(rotate_min(t));
        }
        std::sort(m.begin(), m.end());
        if (best.empty() || m < best) best = m;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool has_edge(const Complex &c, int a, int b) {
    for (const auto &t : c)
        for (int k = 0; k < 3; ++k)
            if ((t[k] == a && t[(k + 1) % 3] == b) || (t[k] == b && t[(k + 1) % 3] == a)) return true;
    return false;
}

std::string vname(int v) {
    static const char *corners[] = {"p", "q", "r", "s"};
    return v < 4 ? corners[v] : "v" + std::to_string(v - 3);
}

ConstrainedTriangulation to_ct(const Complex &c, int n, const std::vector<std::string> &ids) {
    ConstrainedTriangulation ct;
    for (int v = 0; v < n; ++v) ct.vertices.push_back(vname(v));
    ct.corners = {"p", "q", "r", "s"};
    for (std::size_t i = 0; i < c.size(); ++i)
        ct.triangles.push_back({ids[i], {vname(c[i][0]), vname(c[i][1]), vname(c[i][2])}});
    return ct;
}

std::vector<std::string> letters(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('A' + i)));
    return out;
}

/// All triangulations of the square with `interior` interior vertices, up to
/// relabelling: stellar and edge subdivisions of the previous level, closed
/// under edge flips.
std::vector<Complex> triangulations(int interior) {
    std::set<Complex> level{canonical({{0, 1, 2}, {0, 2, 3}}, 4), canonical({{0, 1, 3}, {1, 2, 3}}, 4)};
    for (int k = 1; k <= interior; ++k) {
        int n = 4 + k, v = n - 1;
        std::set<Complex> next;
        std::vector<Complex> todo;
        auto push = [&](const Complex &c) {
            auto cc = canonical(c, n);
            if (!next.count(cc)) {
                next.insert(cc);
                todo.push_back(cc);
            }
        };
        for (const auto &c : level) {
            for (std::size_t i = 0; i < c.size(); ++i) {
                auto [a, b, d] = c[i];
                Complex m = c;
                m[i] = {a, b, v};
                m.push_back({b, d, v});
                m.push_back({d, a, v});
                push(m);
            }
            // split an interior edge a-b shared by (a, b, x) and (b, a, y)
            for (std::size_t i = 0; i < c.size(); ++i)
                for (std::size_t j = 0; j < c.size(); ++j)
                    for (int e = 0; e < 3; ++e) {
                        int a = c[i][e], b = c[i][(e + 1) % 3], x = c[i][(e + 2) % 3];
                        for (int f = 0; f < 3; ++f) {
                            if (c[j][f] != b || c[j][(f + 1) % 3] != a) continue;
                            int y = c[j][(f + 2) % 3];
                            Complex m;
                            for (std::size_t t = 0; t < c.size(); ++t)
                                if (t != i && t != j) m.push_back(c[t]);
                            m.push_back({a, v, x});
                            m.push_back({v, b, x});
                            m.push_back({b, v, y});
                            m.push_back({v, a, y});
                            push(m);
                        }
                    }
        }
        while (!todo.empty()) {
            Complex c = todo.back();
            todo.pop_back();
            for (std::size_t i = 0; i < c.size(); ++i)
                for (std::size_t j = 0; j < c.size(); ++j)
                    for (int e = 0; e < 3; ++e) {
                        int a = c[i][e], b = c[i][(e + 1) % 3], x = c[i][(e + 2) % 3];
                        for (int f = 0; f < 3; ++f) {
                            if (c[j][f] != b || c[j][(f + 1) % 3] != a) continue;
                            int y = c[j][(f + 2) % 3];
                            if (x == y || has_edge(c, x, y)) continue;
                            Complex m = c;
                            m[i] = {a, y, x};
                            m[j] = {y, b, x};
                            auto ct = to_ct(m, n, letters(m.size()));
                            if (validate_ct(ct).ok) push(m);
                        }
                    }
        }
        level = std::move(next);
        std::cerr << "interior " << k << ": " << level.size() << " triangulations\n";
    }
    return {level.begin(), level.end()};
}

/// A generic drawing with every living triangle positively oriented, from
/// random parameters in [-1, 2] with denominator 64.
std::optional<std::map<std::string, Point>> positive_drawing(const ConstrainedTriangulation &ct, int tries) {
    Parameterization par = drawable_parameterization(ct, {.require_sample = false});
    std::mt19937_64 rng(1);
    for (int attempt = 0; attempt < tries; ++attempt) {
        std::vector<BigRational> vals;
        for (std::size_t k = 0; k < par.num_params(); ++k)
            vals.push_back(make_rational(static_cast<long>(rng() % 193) - 64, 64));
        Drawing d;
        try {
            d = evaluate_drawing(ct, par, vals);
        } catch (const Error &) {
            continue;
        }
        if (!d.flags.is_generic) continue;
        auto areas = living_areas(ct, d.points);
        if (std::all_of(areas.begin(), areas.end(), [](const BigRational &a) { return a > 0; })) return d.points;
    }
    return std::nullopt;
}

/// Runs area_polynomial in a child process first so a stalled elimination
/// costs at most `seconds`.
bool finishes_within(const ConstrainedTriangulation &ct, unsigned seconds) {
    pid_t pid = fork();
    if (pid == 0) {
        alarm(seconds);
        try {
            area_polynomial(ct);
        } catch (const Error &) {
        }
        _exit(0);
    }
    int st = 0;
    waitpid(pid, &st, 0);
    return WIFEXITED(st) && WEXITSTATUS(st) == 0;
}

BigRational at_ones(const MultiPoly &f) { return f.evaluate(std::vector<BigRational>(f.num_vars(), BigRational(1))); }

std::size_t negative_terms(const MultiPoly &f) {
    std::size_t n = 0;
    for (const auto &t : f.terms()) n += t.coeff < 0;
    return n;
}

void emit(const ConstrainedTriangulation &ct, const std::optional<std::map<std::string, Point>> &pts,
          const std::string &out) {
    std::string text = io::to_json(ct, pts ? *pts : std::map<std::string, Point>{}).dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream(out) << text;
    std::cerr << "wrote " << out << "\n";
}

int search_3int(const std::string &out, int tries) {
    int found = 0;
    bool emitted = false;
    for (const auto &c : triangulations(3)) {
        auto ct = to_ct(c, 7, letters(c.size()));
        ct.name = "3int";
        AreaPolynomial ap;
        try {
            ap = area_polynomial(ct);
        } catch (const Error &) {
            continue;
        }
        if (ap.d != 3) continue;
        auto mp = canonical_monsky(ap);
        BigRational f1 = at_ones(mp.f), g1 = at_ones(mp.f_tilde);
        std::set<BigRational> pair{f1, g1};
        if (pair != std::set<BigRational>{BigRational(260), BigRational(252)}) continue;
        auto pts = positive_drawing(ct, tries);
        std::cerr << "match: p(1,...,1) = " << to_string(at_ones(ap.p)) << ", f = " << to_string(f1)
                  << ", positive drawing " << (pts ? "found" : "not found") << "\n";
        for (const auto &t : ct.triangles) std::cerr << " " << t.verts[0] << t.verts[1] << t.verts[2];
        std::cerr << "\n";
        // the labelling with f(1,...,1) = 260 keeps the sign convention of the text
        if (pts && f1 == 260 && !emitted) emit(ct, pts, out), emitted = true;
        ++found;
    }
    std::cerr << found << " matches\n";
    return found ? 0 : 1;
}

int search_nonpositive(const std::string &out, int tries, bool verbose, unsigned limit) {
    int found = 0, examined = 0, cornered = 0, valid = 0;
    for (const auto &c : triangulations(4)) {
        for (unsigned mask = 0; mask < (1u << c.size()); ++mask) {
            if (std::popcount(mask) != 4) continue;
            std::vector<std::size_t> dead, living;
            for (std::size_t i = 0; i < c.size(); ++i) ((mask >> i) & 1u ? dead : living).push_back(i);
            // A, B, C, D are the living triangles touching a corner; there must be four
            std::vector<std::size_t> at_corner;
            for (int corner = 0; corner < 4; ++corner)
                for (auto i : living)
                    if (std::count(c[i].begin(), c[i].end(), corner) &&
                        std::find(at_corner.begin(), at_corner.end(), i) == at_corner.end())
                        at_corner.push_back(i);
            if (at_corner.size() != 4) continue;
            ++cornered;
            std::vector<std::string> ids(c.size());
            for (std::size_t k = 0; k < 4; ++k) ids[at_corner[k]] = std::string(1, static_cast<char>('A' + k));
            char next = 'E';
            for (auto i : living)
                if (ids[i].empty()) ids[i] = std::string(1, next++);
            for (auto i : dead) ids[i] = std::string(1, next++);
            auto ct = to_ct(c, 8, ids);
            ct.name = "nonpositive";
            for (auto i : dead) ct.constraints.push_back({{ids[i]}});
            if (!validate_ct(ct).ok) continue;
            ++valid;
            if (!is_combinatorially_irreducible(ct)) continue;
            ++examined;
            AreaPolynomial ap;
            auto t0 = std::chrono::steady_clock::now();
            try {
                if (!finishes_within(ct, limit)) {
                    if (verbose) std::cerr << "#" << examined << " timed out\n";
                    continue;
                }
                ap = area_polynomial(ct);
            } catch (const Error &e) {
                if (verbose) std::cerr << "#" << examined << " " << e.what() << "\n";
                continue;
            }
            if (verbose)
                std::cerr << "#" << examined << " d=" << ap.d << " terms=" << ap.p.size() << " "
                          << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << "s\n";
            if (ap.d != 4 || ap.p.size() != 70) continue;
            auto mp = canonical_monsky(ap);
            std::cerr << "candidate: p has " << ap.p.size() << " terms, f " << mp.f.size() << ", f~ "
                      << mp.f_tilde.size() << ", negative " << negative_terms(mp.f) << "/"
                      << negative_terms(mp.f_tilde) << "\n";
            Monomial abcd;
            for (const auto &x : {"A", "B", "C", "D"}) {
                auto it = std::find(ap.vars()->begin(), ap.vars()->end(), x);
                abcd.set(static_cast<std::size_t>(it - ap.vars()->begin()), 1);
            }
            if (abs(ap.p.coefficient(abcd)) != 40) continue;
            auto pts = positive_drawing(ct, tries);
            std::cerr << "match, positive drawing " << (pts ? "found" : "not found") << "\n";
            if (found++ == 0) emit(ct, pts, out);
        }
    }
    std::cerr << cornered << " with four living corner triangles, " << valid << " valid, " << examined
              << " irreducible, " << found << " matches\n";
    return found ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"search for the figure-only examples"};
    app.require_subcommand(1);
    std::string out;
    int tries = 20000;
    app.add_option("--out", out, "write the first match here instead of stdout");
    bool verbose = false;
    unsigned limit = 30;
    app.add_option("--limit", limit, "seconds allowed per elimination");
    app.add_flag("--verbose", verbose, "report every candidate");
    app.add_option("--tries", tries, "sampler seeds to try when looking for a positive drawing");
    auto *three = app.add_subcommand("3int", "8 triangles, degree 3, f(1,...,1) = 260");
    auto *nonpos = app.add_subcommand("nonpositive", "10 triangles, 4 constraints, -40*A*B*C*D in p");
    CLI11_PARSE(app, argc, argv);
    try {
        if (three->parsed()) return search_3int(out, tries);
        if (nonpos->parsed()) return search_nonpositive(out, tries, verbose, limit);
    } catch (const Error &e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
