#include "glnq/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace glnq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        sum_ += parts_[i];
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw std::invalid_argument("bad partition text: " + text);
        parts.push_back(v);
    }
    if (parts.empty()) throw std::invalid_argument("empty partition text");
    return Partition(parts);
}

int Partition::part(int i) const {
    if (i < 0) throw std::out_of_range("negative partition index");
    return i < length() ? parts_[i] : 0;
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    int width = parts_.empty() ? 0 : parts_[0];
    for (int i = 1; i <= width; ++i) {
        int count = 0;
        for (int p : parts_)
            if (p >= i) ++count;
        conj.push_back(count);
    }
    return Partition(conj);
}

std::string Partition::str() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Dominance dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.sum() != lambda.sum())
        throw std::invalid_argument("dominance comparison requires equal sizes");
    int len = std::max(mu.length(), lambda.length());
    bool mu_le = true, mu_ge = true;
    long long sm = 0, sl = 0;
    for (int i = 0; i < len; ++i) {
        sm += mu.part(i);
        sl += lambda.part(i);
        if (sm > sl) mu_le = false;
        if (sm < sl) mu_ge = false;
    }
    if (mu_le) return Dominance::below_or_equal;  // includes equality
    if (mu_ge) return Dominance::above;
    return Dominance::incomparable;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int a = std::min(remaining, max_part); a >= 1; --a) {
        cur.push_back(a);
        gen_partitions(remaining - a, a, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 1) throw std::invalid_argument("partitions_of requires n >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return out;
}

SemistandardTableau::SemistandardTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.length())
        throw std::invalid_argument("tableau row count does not match shape");
    for (int r = 0; r < shape_.length(); ++r) {
        if (static_cast<int>(rows_[r].size()) != shape_.part(r))
            throw std::invalid_argument("tableau row length does not match shape");
        for (int c = 0; c < shape_.part(r); ++c) {
            int v = rows_[r][c];
            if (v < 1) throw std::invalid_argument("tableau entries must be positive");
            if (c > 0 && rows_[r][c - 1] > v)
                throw std::invalid_argument("tableau rows must weakly increase");
            if (r > 0 && c < shape_.part(r - 1) && rows_[r - 1][c] >= v)
                throw std::invalid_argument("tableau columns must strictly increase");
        }
    }
}

std::vector<int> SemistandardTableau::content() const {
    int maxv = 0;
    for (const auto& row : rows_)
        for (int v : row) maxv = std::max(maxv, v);
    std::vector<int> counts(maxv, 0);
    for (const auto& row : rows_)
        for (int v : row) ++counts[v - 1];
    return counts;
}

std::string SemistandardTableau::str() const {
    std::string out;
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (r) out += " / ";
        for (size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) out += ' ';
            out += std::to_string(rows_[r][c]);
        }
    }
    return out;
}

namespace {

// Backtracking over cells in row-major order; candidate letters ascend, so the
// output order is deterministic.
void fill_ssyt(const Partition& shape, std::vector<int>& budget,
               std::vector<std::vector<int>>& rows, int r, int c,
               std::vector<SemistandardTableau>& out) {
    if (r == shape.length()) {
        out.emplace_back(shape, rows);
        return;
    }
    int nr = r, nc = c + 1;
    if (nc == shape.part(r)) {
        nr = r + 1;
        nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    for (int v = lo; v <= static_cast<int>(budget.size()); ++v) {
        if (budget[v - 1] == 0) continue;
        --budget[v - 1];
        rows[r][c] = v;
        fill_ssyt(shape, budget, rows, nr, nc, out);
        ++budget[v - 1];
    }
}

} // namespace

std::vector<SemistandardTableau> semistandard_tableaux(const Partition& shape,
                                                       const Partition& content) {
    if (shape.sum() != content.sum())
        throw std::invalid_argument("shape and content must partition the same integer");
    std::vector<SemistandardTableau> out;
    if (shape.sum() == 0) {
        out.emplace_back(shape, std::vector<std::vector<int>>{});
        return out;
    }
    std::vector<int> budget(content.parts().begin(), content.parts().end());
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < shape.length(); ++r) rows.emplace_back(shape.part(r), 0);
    fill_ssyt(shape, budget, rows, 0, 0, out);
    return out;
}

long long kostka_number(const Partition& mu, const Partition& lambda) {
    return static_cast<long long>(semistandard_tableaux(mu, lambda).size());
}

IntPolynomial::IntPolynomial(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(long long c) {
    return IntPolynomial(std::vector<long long>{c});
}

IntPolynomial IntPolynomial::monomial(int degree, long long c) {
    std::vector<long long> v(degree + 1, 0);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

long long IntPolynomial::coeff(int d) const {
    return (d >= 0 && d < static_cast<int>(coeffs_.size())) ? coeffs_[d] : 0;
}

long long IntPolynomial::eval(long long t) const {
    long long acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    return *this;
}

std::string IntPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int d = 0; d <= degree(); ++d) {
        long long c = coeffs_[d];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (d == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c) + "*";
            out += (d == 1) ? "t" : "t^" + std::to_string(d);
        }
    }
    return out;
}

std::vector<int> reading_word(const SemistandardTableau& t) {
    std::vector<int> word;
    const auto& rows = t.rows();
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        word.insert(word.end(), it->begin(), it->end());
    return word;
}

long long charge(const std::vector<int>& word) {
    if (word.empty()) return 0;
    int maxl = *std::max_element(word.begin(), word.end());
    if (*std::min_element(word.begin(), word.end()) < 1)
        throw std::invalid_argument("charge: letters must be positive");
    std::vector<int> counts(maxl, 0);
    for (int v : word) ++counts[v - 1];
    for (int l = 1; l < maxl; ++l)
        if (counts[l] > counts[l - 1])
            throw std::invalid_argument("charge: word content must be a partition");

    std::vector<bool> alive(word.size(), true);
    size_t remaining = word.size();
    long long total = 0;
    while (remaining > 0) {
        int k = 0;
        std::vector<std::vector<int>> pos(maxl + 1);
        for (size_t i = 0; i < word.size(); ++i) {
            if (!alive[i]) continue;
            pos[word[i]].push_back(static_cast<int>(i));
            k = std::max(k, word[i]);
        }
        // Extract one standard subword 1..k: rightmost 1, then for each next
        // letter the rightmost occurrence strictly to the left, wrapping to
        // the rightmost occurrence overall when there is none.
        std::vector<int> chosen(k + 1, -1);
        chosen[1] = pos[1].back();
        for (int l = 2; l <= k; ++l) {
            const auto& pl = pos[l];
            auto it = std::lower_bound(pl.begin(), pl.end(), chosen[l - 1]);
            chosen[l] = (it == pl.begin()) ? pl.back() : *std::prev(it);
        }
        long long idx = 0;
        for (int l = 2; l <= k; ++l) {
            if (chosen[l] > chosen[l - 1]) ++idx;
            total += idx;
        }
        for (int l = 1; l <= k; ++l) alive[chosen[l]] = false;
        remaining -= k;
    }
    return total;
}

IntPolynomial kostka_polynomial(const Partition& mu, const Partition& lambda) {
    if (mu.sum() != lambda.sum())
        throw std::invalid_argument("shape and content must partition the same integer");
    IntPolynomial acc;
    for (const auto& t : semistandard_tableaux(mu, lambda))
        acc += IntPolynomial::monomial(static_cast<int>(charge(reading_word(t))));
    return acc;
}

} // namespace glnq
