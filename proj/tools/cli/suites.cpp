#include "suites.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <sstream>

#include "gessel/closed_forms.hpp"
#include "gessel/dyck.hpp"
#include "gessel/errors.hpp"
#include "gessel/norton.hpp"
#include "gessel/words.hpp"

namespace gessel::cli {

namespace {

using Entries = std::vector<ReportEntry>;

template <typename F>
ReportEntry timed(F&& make) {
    const auto start = std::chrono::steady_clock::now();
    ReportEntry e = make();
    e.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return e;
}

std::string param(const std::string& key, long value) { return key + "=" + std::to_string(value); }

int bound(const std::optional<int>& given, int fallback, int cap, const char* what) {
    const int value = given.value_or(fallback);
    if (value > cap) {
        throw ResourceLimitError(std::string(what) + " = " + std::to_string(value) + " exceeds the cap " +
                                 std::to_string(cap));
    }
    return value;
}

std::string join(const std::vector<Count>& values, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? sep : "") + to_decimal(values[i]);
    return out;
}

std::string word_text(std::span<const Letter> letters) {
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) out += (i ? " " : "") + letters[i].to_token();
    return out;
}

// "expected k of k hold" style entry for exhaustive checks.
ReportEntry tally(std::string name, std::string params, long total, long held, std::string first_failure,
                  bool conjecture = false) {
    auto make = conjecture ? conjectured : asserted;
    return make(std::move(name), std::move(params), std::to_string(total), std::to_string(held),
                std::move(first_failure));
}

Entries theorem_suite(const SuiteBounds& b) {
    const int n_max = bound(b.n_max, 30, 200, "theorem n-max");
    Entries out;
    out.push_back(timed([] {
        std::vector<Count> prefix;
        for (int n = 1; n <= 4; ++n) prefix.push_back(g1_closed(n));
        return asserted("g1 prefix", "n=1..4", "1,7,38,187", join(prefix));
    }));
    for (int n = 1; n <= n_max; ++n) {
        out.push_back(timed([n] {
            return asserted("theorem", param("n", n), to_decimal(g1_closed(n)),
                            to_decimal(bar_first_total(n) + one_first_total(n)));
        }));
        out.push_back(timed([n] {
            return asserted("bar-first closed form", param("n", n), to_decimal(bar_first_total(n)),
                            to_decimal(bar_first_total_closed(n)));
        }));
    }
    for (int n = 2; n <= n_max; ++n) {
        out.push_back(timed([n] { return asserted("s1", param("n", n), to_decimal(s1_direct(n)), to_decimal(s1_closed(n))); }));
        out.push_back(timed([n] { return asserted("s2", param("n", n), to_decimal(s2_direct(n)), to_decimal(s2_closed(n))); }));
        if (n >= 3) {
            out.push_back(timed([n] { return asserted("s3", param("n", n), to_decimal(s3_direct(n)), to_decimal(s3_closed(n))); }));
        }
    }
    return out;
}

Entries identities_suite(const SuiteBounds& b) {
    const int limit = bound(b.n_max, 15, 40, "identities n-max");
    Entries out;
    out.push_back(timed([] {
        long total = 0, held = 0;
        std::string first;
        for (int i = 0; i <= 12; ++i)
            for (int j = 0; j <= 12; ++j)
                for (int k = 0; k <= 24; ++k) {
                    ++total;
                    if (ballot_count(i, j, k) == ballot_count_dp(i, j, k)) {
                        ++held;
                    } else if (first.empty()) {
                        first = "i=" + std::to_string(i) + " j=" + std::to_string(j) + " k=" + std::to_string(k);
                    }
                }
        return tally("ballot formula vs dp", "i,j<=12 k<=24", total, held, first);
    }));
    auto triples = [limit](const char* name, const char* domain, auto&& in_domain, auto&& check) {
        return timed([&] {
            long total = 0, held = 0;
            std::string first;
            for (int a = 0; a <= limit; ++a)
                for (int bb = 0; bb <= limit; ++bb)
                    for (int c = 0; c <= limit; ++c) {
                        if (!in_domain(a, bb, c)) continue;
                        ++total;
                        if (check(a, bb, c)) {
                            ++held;
                        } else if (first.empty()) {
                            first = "A=" + std::to_string(a) + " B=" + std::to_string(bb) + " C=" + std::to_string(c);
                        }
                    }
            return tally(name, std::string(domain) + ", bound " + std::to_string(limit), total, held, first);
        });
    };
    out.push_back(triples("catalan triangle sum", "C<=B", [](int, int bb, int c) { return c <= bb; },
                          [](int a, int bb, int c) { return check_identity_catid(a, bb, c); }));
    out.push_back(triples("catalan triangle difference", "C<=B<=A",
                          [](int a, int bb, int c) { return c <= bb && bb <= a; },
                          [](int a, int bb, int c) { return check_identity_catid2(a, bb, c); }));
    out.push_back(timed([limit] {
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<int> value(-1000, 1000);
        long total = 0, held = 0;
        std::string first;
        for (int a = 0; a <= limit; ++a) {
            std::vector<std::vector<int>> table(a + 1, std::vector<int>(a + 1));
            for (auto& row : table)
                for (auto& v : row) v = value(rng);
            ++total;
            if (check_split_sum(a, [&](int u, int s) { return Count(table[u][s]); })) {
                ++held;
            } else if (first.empty()) {
                first = "A=" + std::to_string(a);
            }
        }
        return tally("split sum regrouping", "random f", total, held, first);
    }));
    return out;
}

Entries bijection_suite(const SuiteBounds& b) {
    const int len_max = bound(b.len_max, 12, 14, "bijection len-max");
    Entries out;
    for (int n = 0; 2 * n <= len_max; ++n) {
        using Key = std::pair<std::vector<int>, std::vector<Letter>>;
        long words = 0, round_trips = 0;
        std::string first;
        std::map<Key, std::pair<PHConstraint, long>> classes;
        const auto start = std::chrono::steady_clock::now();
        for_each_complete_word(2, n, [&](std::span<const Letter> letters) {
            ++words;
            const GesselWord word(std::vector<Letter>(letters.begin(), letters.end()), 2);
            const MarkerLists lists = word_to_markers(word);
            std::vector<int> steps;
            for (const auto& l : letters) {
                if (l.index == 2) steps.push_back(l.barred ? -1 : 1);
            }
            bool ok = false;
            try {
                ok = markers_to_word(DyckPath(steps), lists.word_positions, lists.signs) == word;
            } catch (const Error&) {
            }
            if (ok) {
                ++round_trips;
            } else if (first.empty()) {
                first = word_text(letters);
            }
            auto [it, inserted] = classes.try_emplace({lists.word_positions, lists.signs}, lists.constraint(), 0);
            ++it->second.second;
        });
        auto e = tally("round trip", param("length", 2 * n), words, round_trips, first);
        e.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(e));

        out.push_back(timed([&] {
            long matched = 0;
            std::string bad;
            for (const auto& [key, value] : classes) {
                const int path_length = 2 * n - static_cast<int>(key.first.size());
                if (count_ph_paths(value.first, path_length) == value.second) {
                    ++matched;
                } else if (bad.empty()) {
                    std::ostringstream os;
                    os << "positions";
                    for (int p : key.first) os << ' ' << p;
                    bad = os.str();
                }
            }
            return tally("class counts", param("length", 2 * n), static_cast<long>(classes.size()), matched, bad);
        }));
    }
    return out;
}

Entries diamond_suite(const SuiteBounds& b) {
    const int n_max = bound(b.n_max, 8, 40, "diamond n-max");
    Entries out;
    for (int n = 3; n <= n_max; ++n) {
        out.push_back(timed([n] {
            long total = 0, held = 0;
            std::string first;
            for (int i = 1; i <= n - 1; ++i)
                for (int j = i + 1; j <= n - 1; ++j) {
                    ++total;
                    if (diamond_equal(i, j, n)) {
                        ++held;
                    } else if (first.empty()) {
                        first = "i=" + std::to_string(i) + " j=" + std::to_string(j);
                    }
                }
            return tally("diamond", param("n", n), total, held, first);
        }));
    }
    return out;
}

bool dyck_signs(const std::vector<Letter>& signs) {
    int height = 0;
    for (const auto& s : signs) {
        height += s.barred ? -1 : 1;
        if (height < 0) return false;
    }
    return true;
}

Entries cpt_suite(const SuiteBounds& b) {
    const int n_max = bound(b.n_max, 5, 6, "cpt n-max");
    Entries out;
    for (int n = 1; n <= n_max; ++n) {
        for (int n1 = 0; n1 <= std::min(2, n); ++n1) {
            out.push_back(timed([n, n1] {
                using Key = std::pair<std::vector<int>, std::vector<Letter>>;
                std::map<Key, long> brute;
                EnumerationOptions options;
                options.pair_counts = std::vector<int>{n1, n - n1};
                for_each_complete_word(2, n, [&](std::span<const Letter> letters) {
                    Key key;
                    for (std::size_t p = 0; p < letters.size(); ++p) {
                        if (letters[p].index == 1) {
                            key.first.push_back(static_cast<int>(p) + 1);
                            key.second.push_back(letters[p]);
                        }
                    }
                    ++brute[key];
                }, options);

                // Every placement and sign pattern, including those with no words.
                const int m = 2 * n1;
                long total = 0, held = 0;
                std::string first;
                std::vector<int> positions(m);
                std::function<void(int, int)> place = [&](int slot, int from) {
                    if (slot < m) {
                        for (int p = from; p <= 2 * n; ++p) {
                            positions[slot] = p;
                            place(slot + 1, p + 1);
                        }
                        return;
                    }
                    for (int mask = 0; mask < (1 << m); ++mask) {
                        if (__builtin_popcount(static_cast<unsigned>(mask)) != n1) continue;
                        std::vector<Letter> signs;
                        for (int bit = 0; bit < m; ++bit) signs.push_back(Letter{1, ((mask >> bit) & 1) != 0});
                        const auto it = brute.find({positions, signs});
                        const Count expected = it == brute.end() ? 0 : it->second;
                        ++total;
                        if (g_n1_fixed_markers(signs, positions, n) == expected) {
                            ++held;
                        } else if (first.empty()) {
                            first = word_text(signs) + " at";
                            for (int p : positions) first += " " + std::to_string(p);
                        }
                    }
                };
                place(0, 1);
                return tally("fixed markers vs enumeration", param("n", n) + " " + param("n1", n1), total, held,
                             first);
            }));
        }
        out.push_back(timed([n] {
            long total = 0, held = 0;
            std::string first;
            for (int n1 = 1; n1 <= std::min(2, n); ++n1) {
                const int m = 2 * n1;
                std::vector<int> positions(m);
                std::function<void(int, int)> place = [&](int slot, int from) {
                    if (slot < m) {
                        for (int p = from; p <= 2 * n; ++p) {
                            positions[slot] = p;
                            place(slot + 1, p + 1);
                        }
                        return;
                    }
                    for (int mask = 0; mask < (1 << m); ++mask) {
                        std::vector<Letter> signs;
                        for (int bit = 0; bit < m; ++bit) signs.push_back(Letter{1, ((mask >> bit) & 1) != 0});
                        if (__builtin_popcount(static_cast<unsigned>(mask)) != n1 || !dyck_signs(signs)) continue;
                        ++total;
                        if (g_n1_fixed_markers(signs, positions, n) == catalan(n - n1)) {
                            ++held;
                        } else if (first.empty()) {
                            first = word_text(signs);
                        }
                    }
                };
                place(0, 1);
            }
            return tally("dyck marker words give catalan", param("n", n), total, held, first);
        }));
    }
    return out;
}

// Sign-word rows for 2n = 4: word, sums, n1, n10, m.
const char* const kTableOne =
    "1111:1,3:4,0,2;1110:1:3,1,1;1101:1:3,1,1;1011:1:3,1,1;0111:1:3,0,1;0011:1:2,0,1";
// (plus signs, sum) cells for 2n = 8.
const char* const kTableTwo =
    "8+:1,1,1,1;7+:8,8,8;6+:28,28,1;5+:56,8;4+:28,1;3+:8;2+:1";

std::string table_one() {
    std::string out;
    for (const auto& row : achievable_rows(2)) {
        if (!out.empty()) out += ';';
        out += row.word.to_binary() + ':';
        for (std::size_t i = 0; i < row.sums.size(); ++i) out += (i ? "," : "") + std::to_string(row.sums[i]);
        out += ':' + std::to_string(row.stats.n1) + ',' + std::to_string(row.stats.n10) + ',' +
               std::to_string(row.stats.m);
    }
    return out;
}

std::string table_two() {
    const auto table = table_counts(4);
    std::string out;
    for (int plus = 8; plus >= 0; --plus) {
        std::vector<Count> cells;
        for (int t = 1; t <= 7; t += 2) {
            auto it = table.find({plus, t});
            if (it != table.end()) cells.push_back(it->second);
        }
        if (cells.empty()) continue;
        if (!out.empty()) out += ';';
        out += std::to_string(plus) + "+:" + join(cells);
    }
    return out;
}

Entries norton_suite(const SuiteBounds& b) {
    const int n_max = bound(b.n_max, 6, 10, "norton n-max");
    Entries out;
    out.push_back(timed([] { return asserted("norton count", param("n", 2), "7", to_decimal(norton_count(2))); }));
    out.push_back(timed([] { return asserted("achievable rows", param("n", 2), kTableOne, table_one()); }));
    out.push_back(timed([] { return asserted("sum table", param("n", 4), kTableTwo, table_two()); }));
    for (int n = 1; n <= n_max; ++n) {
        out.push_back(timed([n] {
            long total = 0, held = 0;
            std::string first;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (2 * n)); ++mask) {
                const auto w = SignWord::from_mask(mask, 2 * n);
                ++total;
                if (static_cast<int>(achievable_odd_sums(w).size()) == std::max(stats(w).m, 0)) {
                    ++held;
                } else if (first.empty()) {
                    first = w.to_binary();
                }
            }
            return tally("multiplicity", param("n", n), total, held, first, true);
        }));
        out.push_back(timed([n] {
            return conjectured("norton count equals g1", param("n", n), to_decimal(g1_closed(n)),
                               to_decimal(norton_count(n)));
        }));
        out.push_back(timed([n] {
            const auto r = diagonal_columns(n);
            auto describe = [](bool columns, bool cells, const Count& full, const Count& partial) {
                return std::string("columns ") + (columns ? "binomial" : "not binomial") + ", cells " +
                       (cells ? "binomial" : "not binomial") + ", full " + to_decimal(full) + ", partial " +
                       to_decimal(partial);
            };
            return conjectured("diagonal pattern", param("n", n),
                               describe(true, true, one_first_total(n), bar_first_total(n)),
                               describe(r.columns_are_binomial, r.cells_are_small_binomials,
                                        r.full_contribution_total, r.partial_contribution_total));
        }));
    }
    return out;
}

using Suite = Entries (*)(const SuiteBounds&);

const std::vector<std::pair<std::string, Suite>>& registry() {
    static const std::vector<std::pair<std::string, Suite>> suites{
        {"theorem", theorem_suite}, {"identities", identities_suite}, {"bijection", bijection_suite},
        {"diamond", diamond_suite}, {"cpt", cpt_suite},               {"norton", norton_suite},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, suite] : registry()) v.push_back(name);
        return v;
    }();
    return names;
}

std::vector<ReportEntry> run_suite(const std::string& name, const SuiteBounds& bounds) {
    std::vector<Suite> selected;
    for (const auto& [key, suite] : registry()) {
        if (name == "all" || name == key) selected.push_back(suite);
    }
    if (selected.empty()) throw PreconditionError("unknown suite '" + name + "'");

    std::vector<std::future<Entries>> running;
    for (Suite suite : selected) running.push_back(std::async(std::launch::async, suite, bounds));
    Entries out;
    for (auto& f : running) {
        auto part = f.get();
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

}  // namespace gessel::cli
