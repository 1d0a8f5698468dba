#include "vmosaic/gauss.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <tuple>

namespace vmosaic {

GaussCode renumber_by_first_appearance(GaussCode code) {
    std::map<int, int> fresh;
    for (auto& s : code.symbols) {
        auto [it, inserted] = fresh.try_emplace(s.id, fresh.size() + 1);
        (void)inserted;
        s.id = it->second;
    }
    return code;
}

void require_wellformed(const GaussCode& code) {
    std::map<int, std::vector<GaussSymbol>> seen;
    for (const auto& s : code.symbols) seen[s.id].push_back(s);
    for (const auto& [id, occ] : seen) {
        if (occ.size() != 2)
            throw BadCode("crossing " + std::to_string(id) + " appears " +
                          std::to_string(occ.size()) + " times, want 2");
        if (occ[0].over == occ[1].over)
            throw BadCode("crossing " + std::to_string(id) +
                          " is not visited once over and once under");
        if (occ[0].sign != occ[1].sign)
            throw BadCode("crossing " + std::to_string(id) +
                          " has mismatched signs");
    }
}

GaussCode parse_code(const std::string& text) {
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip_ws();
    if (i == text.size()) throw SyntaxError("empty code");

    bool full = text.find('O') != std::string::npos ||
                text.find('U') != std::string::npos;
    GaussCode code;
    if (full) {
        while (skip_ws(), i < text.size()) {
            char pass = text[i++];
            if (pass != 'O' && pass != 'U')
                throw SyntaxError(std::string("expected O or U, got '") + pass +
                                  "'");
            skip_ws();
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            if (start == i) throw SyntaxError("expected a crossing number");
            int id = std::stoi(text.substr(start, i - start));
            skip_ws();
            if (i == text.size() || (text[i] != '+' && text[i] != '-'))
                throw SyntaxError("expected + or - after crossing " +
                                  std::to_string(id));
            int sign = text[i++] == '+' ? +1 : -1;
            code.symbols.push_back({pass == 'O', id, sign});
        }
        code = renumber_by_first_appearance(std::move(code));
        require_wellformed(code);
        return code;
    }

    // Classical shorthand: ids with optional sign marks.
    struct Occurrence {
        int id;
        int mark; // +1, -1, or 0 for none
    };
    std::vector<Occurrence> occs;
    while (skip_ws(), i < text.size()) {
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (start == i)
            throw SyntaxError(std::string("unexpected character '") + text[i] +
                              "'");
        int id = std::stoi(text.substr(start, i - start));
        skip_ws();
        int mark = 0;
        if (i < text.size() && (text[i] == '+' || text[i] == '-'))
            mark = text[i++] == '+' ? +1 : -1;
        occs.push_back({id, mark});
    }
    std::map<int, std::vector<size_t>> where;
    for (size_t k = 0; k < occs.size(); ++k) where[occs[k].id].push_back(k);
    for (const auto& [id, at] : where)
        if (at.size() != 2)
            throw BadCode("crossing " + std::to_string(id) + " appears " +
                          std::to_string(at.size()) + " times, want 2");
    std::map<int, bool> seen;
    for (const auto& occ : occs) {
        auto& first = where[occ.id];
        int mark = occs[first[0]].mark ? occs[first[0]].mark : occs[first[1]].mark;
        int sign = mark ? mark : +1;
        bool over = !seen[occ.id]; // first occurrence is the over pass
        seen[occ.id] = true;
        code.symbols.push_back({over, occ.id, sign});
    }
    code = renumber_by_first_appearance(std::move(code));
    require_wellformed(code);
    return code;
}

std::string print_code(const GaussCode& code) {
    std::string out;
    for (const auto& s : code.symbols) {
        out += s.over ? 'O' : 'U';
        out += std::to_string(s.id);
        out += s.sign > 0 ? '+' : '-';
    }
    return out;
}

namespace {

// Comparison key: O before U, small id first, + before -.
std::tuple<int, int, int> symbol_key(const GaussSymbol& s) {
    return {s.over ? 0 : 1, s.id, s.sign > 0 ? 0 : 1};
}

bool code_less(const GaussCode& a, const GaussCode& b) {
    return std::lexicographical_compare(
        a.symbols.begin(), a.symbols.end(), b.symbols.begin(), b.symbols.end(),
        [](const GaussSymbol& x, const GaussSymbol& y) {
            return symbol_key(x) < symbol_key(y);
        });
}

} // namespace

GaussCode canonicalize(const GaussCode& code, bool allow_reversal) {
    size_t L = code.symbols.size();
    if (L == 0) return code;
    GaussCode best;
    bool have = false;
    auto consider = [&](const std::vector<GaussSymbol>& seq) {
        for (size_t r = 0; r < L; ++r) {
            GaussCode cand;
            cand.symbols.reserve(L);
            for (size_t k = 0; k < L; ++k)
                cand.symbols.push_back(seq[(r + k) % L]);
            cand = renumber_by_first_appearance(std::move(cand));
            if (!have || code_less(cand, best)) {
                best = std::move(cand);
                have = true;
            }
        }
    };
    consider(code.symbols);
    if (allow_reversal) {
        auto rev = code.symbols;
        std::reverse(rev.begin(), rev.end());
        consider(rev);
    }
    return best;
}

int max_nonrepeating(const GaussCode& code) {
    int L = static_cast<int>(code.symbols.size());
    if (L == 0) return 0;
    std::map<int, int> inside;
    int best = 0, left = 0;
    for (int right = 0; right < 2 * L; ++right) {
        int id = code.symbols[right % L].id;
        ++inside[id];
        while (inside[id] > 1 || right - left + 1 > L) {
            --inside[code.symbols[left % L].id];
            ++left;
        }
        best = std::max(best, right - left + 1);
    }
    return best;
}

namespace {

bool interlaces(int p1, int p2, int q1, int q2) {
    // Chords {p1,p2}, {q1,q2} on a cycle, endpoints distinct.
    bool q1_in = p1 < q1 && q1 < p2;
    bool q2_in = p1 < q2 && q2 < p2;
    return q1_in != q2_in;
}

} // namespace

bool is_realizable_planar(const GaussCode& code) {
    int n = code.crossings();
    if (n == 0) return true;
    if (n > 18)
        throw SearchSpaceTooLarge("planarity search supports at most 18 crossings");
    int L = 2 * n;

    std::vector<std::pair<int, int>> pos(n + 1, {-1, -1});
    for (int p = 0; p < L; ++p) {
        int id = code.symbols[p].id;
        (pos[id].first < 0 ? pos[id].first : pos[id].second) = p;
    }

    // Necessary condition: every chord interlaces evenly many others.
    for (int a = 1; a <= n; ++a) {
        int count = 0;
        for (int b = 1; b <= n; ++b)
            if (b != a &&
                interlaces(pos[a].first, pos[a].second, pos[b].first, pos[b].second))
                ++count;
        if (count % 2) return false;
    }

    // Exact: the diagram is a 4-valent graph whose vertices admit two
    // transversal rotations each; planar iff some choice yields F = n + 2.
    // Darts: arc a runs from position a to a+1; dart 2a is its tail (at
    // vertex of position a), dart 2a+1 its head (at position a+1).
    auto out_dart = [&](int p) { return 2 * p; };
    auto in_dart = [&](int p) { return 2 * ((p + L - 1) % L) + 1; };
    std::vector<int> sigma(2 * L);
    std::vector<char> seen(2 * L);
    std::vector<int> choice(n, 0);
    for (long mask = 0; mask < (1L << n); ++mask) {
        for (int a = 1; a <= n; ++a) {
            auto [p, q] = pos[a];
            int ip = in_dart(p), op = out_dart(p);
            int iq = in_dart(q), oq = out_dart(q);
            if (mask >> (a - 1) & 1) {
                sigma[ip] = iq; sigma[iq] = op; sigma[op] = oq; sigma[oq] = ip;
            } else {
                sigma[ip] = oq; sigma[oq] = op; sigma[op] = iq; sigma[iq] = ip;
            }
        }
        std::fill(seen.begin(), seen.end(), 0);
        int faces = 0;
        for (int d = 0; d < 2 * L; ++d) {
            if (seen[d]) continue;
            ++faces;
            int e = d;
            while (!seen[e]) {
                seen[e] = 1;
                e = sigma[e ^ 1]; // twin, then rotate
            }
        }
        if (faces == n + 2) return true;
    }
    return false;
}

} // namespace vmosaic
