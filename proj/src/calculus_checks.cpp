#include "abchoice/calculus_checks.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "abchoice/random_choice.hpp"

namespace abchoice {

void CheckTally::record(bool ok, const std::function<std::string()>& describe)
{
    ++instances;
    if (ok)
        return;
    if (violations++ == 0)
        first_violation = describe();
}

std::string CheckTally::summary() const
{
    std::ostringstream out;
    out << instances << " instances, " << violations << " violations";
    if (violations)
        out << " (first: " << first_violation << ")";
    return out.str();
}

std::string to_string(const FourSetSequence& seq)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        out << (i ? " " : "") << '(';
        for (int p = 0; p < 4; ++p)
            out << (p ? "," : "") << seq[i][p];
        out << ')';
    }
    return out.str();
}

namespace {

std::string describe_sets(const ColorSet& a, const ColorSet& b, const ColorSet& c, const ColorSet& d)
{
    std::ostringstream out;
    for (const auto* s : {&a, &b, &c, &d}) {
        out << '{';
        for (std::size_t i = 0; i < s->size(); ++i)
            out << (i ? "," : "") << (*s)[i];
        out << '}';
    }
    return out.str();
}

// next set of a valid sequence, position by position
bool extend(const FourSet& prev, int colours, std::uint32_t seen, int p, FourSet& cur,
            const std::function<bool(const FourSet&, std::uint32_t)>& f)
{
    if (p == 4)
        return f(cur, seen);
    cur[p] = prev[p];
    if (!extend(prev, colours, seen, p + 1, cur, f))
        return false;
    auto used = [&](Color c) {
        return std::find(prev.begin(), prev.end(), c) != prev.end() || std::find(cur.begin(), cur.begin() + p, c) != cur.begin() + p;
    };
    Color fresh = 0;
    while (fresh < colours && (seen >> fresh & 1))
        ++fresh;
    for (Color c = 0; c < colours; ++c) {
        if (used(c))
            continue;
        if (!(seen >> c & 1) && c != fresh)
            continue;
        cur[p] = c;
        if (!extend(prev, colours, seen | 1u << c, p + 1, cur, f))
            return false;
    }
    return true;
}

bool grow(FourSetSequence& seq, int m, int colours, std::uint32_t seen,
          const std::function<bool(const FourSetSequence&)>& visit)
{
    if (static_cast<int>(seq.size()) == m)
        return visit(seq);
    FourSet cur{};
    const FourSet prev = seq.back();
    return extend(prev, colours, seen, 0, cur, [&](const FourSet& next, std::uint32_t s) {
        seq.push_back(next);
        const bool go_on = grow(seq, m, colours, s, visit);
        seq.pop_back();
        return go_on;
    });
}

FourSetSequence random_valid_sequence(Rng& rng, int m, int colours)
{
    FourSetSequence seq;
    FourSet first{};
    std::vector<Color> pool(colours);
    for (int i = 0; i < colours; ++i)
        pool[i] = i;
    for (int i = 0; i < 4; ++i) {
        const auto j = i + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(colours - i)));
        std::swap(pool[i], pool[j]);
        first[i] = pool[i];
    }
    seq.push_back(first);
    while (static_cast<int>(seq.size()) < m) {
        const FourSet prev = seq.back();
        FourSet next = prev;
        for (int p = 0; p < 4; ++p) {
            if (bernoulli(rng, 0.5))
                continue;
            std::vector<Color> options;
            for (Color c = 0; c < colours; ++c)
                if (std::find(prev.begin(), prev.end(), c) == prev.end() &&
                    std::find(next.begin(), next.begin() + p, c) == next.begin() + p)
                    options.push_back(c);
            if (!options.empty())
                next[p] = options[uniform_below(rng, options.size())];
        }
        seq.push_back(next);
    }
    return seq;
}

void check_monotone(const FourSetSequence& seq, CheckTally& tally)
{
    const PairRelation full = comp_sequence(seq);
    const int comp_full = full.size();
    const int good_full = good_count(full);
    const int m = static_cast<int>(seq.size());
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            if (i == 0 && j == m - 1)
                continue;
            const FourSetSequence sub(seq.begin() + i, seq.begin() + j + 1);
            const PairRelation rel = comp_sequence(sub);
            tally.record(rel.size() <= comp_full && good_count(rel) <= good_full, [&] {
                return to_string(seq) + " vs [" + std::to_string(i) + "," + std::to_string(j) + "]";
            });
        }
}

} // namespace

bool for_each_valid_sequence(int m, int colours, const std::function<bool(const FourSetSequence&)>& visit)
{
    FourSetSequence seq{{0, 1, 2, 3}};
    return grow(seq, m, colours, 0xfu, visit);
}

CheckTally check_defected_k22(int colours)
{
    CheckTally tally;
    std::vector<ColorSet> quads;
    for (Color a = 0; a < colours; ++a)
        for (Color b = a + 1; b < colours; ++b)
            for (Color c = b + 1; c < colours; ++c)
                for (Color d = c + 1; d < colours; ++d)
                    quads.push_back({a, b, c, d});
    const ColorSet x1{0, 1, 2, 3};
    for (const auto& x2 : quads)
        for (const auto& y1 : quads)
            for (const auto& y2 : quads) {
                const K22Report rep = incomp_k22(x1, x2, y1, y2);
                if (!rep.defected)
                    continue;
                auto degrees = rep.incomp.degrees();
                std::sort(degrees.rbegin(), degrees.rend());
                const SpecialTag tag = classify_special(rep.incomp);
                const bool one_each = rep.bad_left.size() == 1 && rep.bad_right.size() == 1;
                const bool shape = (tag.is_special && tag.has_p1 && tag.has_p2) ||
                                   degrees == std::array<int, 6>{6, 5, 5, 3, 2, 2} || rep.incomp.size() == 21;
                tally.record(one_each && shape, [&] { return describe_sets(x1, x2, y1, y2); });
            }
    return tally;
}

CheckTally check_repeat_identity(int colours)
{
    CheckTally tally;
    for_each_valid_sequence(3, colours, [&](const FourSetSequence& s) {
        const FourSetSequence four{s[0], s[1], s[1], s[2]};
        if (!is_legal_sequence(four))
            return true;
        const FourSetSequence two{s[0], s[2]};
        tally.record(comp_sequence(four) == comp_sequence(two), [&] { return to_string(four); });
        return true;
    });
    return tally;
}

CheckTally check_subsequence_monotonicity(int exhaustive_m, int max_m, int samples, std::uint64_t seed,
                                          int colours)
{
    CheckTally tally;
    for (int m = 2; m <= exhaustive_m; ++m)
        for_each_valid_sequence(m, colours, [&](const FourSetSequence& s) {
            check_monotone(s, tally);
            return true;
        });
    Rng rng(seed);
    for (int i = 0; i < samples; ++i) {
        const int m = 2 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_m - 1)));
        check_monotone(random_valid_sequence(rng, m, colours), tally);
    }
    return tally;
}

CheckTally check_doubling_parity(int max_m, int colours)
{
    CheckTally tally;
    for (int m = 1; m <= max_m; ++m)
        for_each_valid_sequence(m, colours, [&](const FourSetSequence& s) {
            const SpecialTag base = classify_special(comp_sequence(s));
            if (!base.is_special)
                return true;
            FourSetSequence front = s;
            front.insert(front.begin(), s.front());
            FourSetSequence back = s;
            back.push_back(s.back());
            const SpecialTag f = classify_special(comp_sequence(front));
            const SpecialTag b = classify_special(comp_sequence(back));
            tally.record(f.is_special && f.has_p1 == base.has_p1 && f.has_p2 != base.has_p2 && b.is_special &&
                             b.has_p1 != base.has_p1 && b.has_p2 == base.has_p2,
                         [&] { return to_string(s); });
            return true;
        });
    return tally;
}

CheckTally check_odd_sequences(int max_m, int colours)
{
    CheckTally tally;
    for (int m = 3; m <= max_m; m += 2)
        for_each_valid_sequence(m, colours, [&](const FourSetSequence& s) {
            if (std::popcount(static_cast<unsigned>(changed_positions(s))) < 3)
                return true;
            const PairRelation rel = comp_sequence(s);
            const int good = good_count(rel);
            const SpecialTag tag = classify_special(rel);
            const bool disjunction = good >= 3 || rel.size() > 23 || (tag.is_special && tag.has_p1 != tag.has_p2);
            tally.record(good >= 1 && disjunction, [&] { return to_string(s); });
            return true;
        });
    return tally;
}

CheckTally check_comp_dp(int max_m, int samples, std::uint64_t seed, int colours)
{
    CheckTally tally;
    Rng rng(seed);
    for (int i = 0; i < samples; ++i) {
        const int m = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_m)));
        FourSetSequence seq;
        for (int j = 0; j < m; ++j) {
            std::vector<Color> pool(colours);
            for (int c = 0; c < colours; ++c)
                pool[c] = c;
            FourSet a{};
            for (int p = 0; p < 4; ++p) {
                const auto q = p + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(colours - p)));
                std::swap(pool[p], pool[q]);
                a[p] = pool[p];
            }
            seq.push_back(a);
        }
        tally.record(comp_sequence(seq) == comp_sequence_naive(seq), [&] { return to_string(seq); });
    }
    return tally;
}

} // namespace abchoice
