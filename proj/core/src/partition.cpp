#include "ugnsr/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ugnsr/errors.hpp"

namespace ugnsr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (int p : parts_)
        if (p < 0) throw Error("negative part in partition");
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::rectangle(int r, int s) {
    if (r <= 0 || s <= 0) throw Error("rectangle partition needs r, s > 0");
    return Partition(std::vector<int>(static_cast<std::size_t>(s), r));
}

int Partition::multiplicity(int v) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

std::map<int, int> Partition::multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
}

Rational Partition::z() const {
    Rational z(1);
    for (const auto& [v, m] : multiplicities()) {
        for (int j = 0; j < m; ++j) z *= v;
        for (int j = 2; j <= m; ++j) z *= j;
    }
    return z;
}

Partition Partition::remove_part(int v) const {
    auto it = std::find(parts_.begin(), parts_.end(), v);
    if (it == parts_.end()) throw Error("remove_part: no such part");
    std::vector<int> p(parts_.begin(), parts_.end());
    p.erase(p.begin() + (it - parts_.begin()));
    return Partition(std::move(p));
}

Partition Partition::add_part(int v) const {
    std::vector<int> p = parts_;
    p.push_back(v);
    return Partition(std::move(p));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        if (j) out += ",";
        out += std::to_string(parts_[j]);
    }
    return out;
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw Error("bad partition syntax: '" + text + "'");
        for (char c : cur)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw Error("bad partition syntax: '" + text + "'");
        parts.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char c : text) {
        if (c == ',') {
            flush();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) flush();
    else if (!parts.empty()) throw Error("bad partition syntax: '" + text + "'");
    return Partition(std::move(parts));
}

Dominance dominance_compare(const Partition& mu, const Partition& nu) {
    if (mu.weight() != nu.weight()) return Dominance::different_weight;
    if (mu == nu) return Dominance::equal;
    bool ge = true, le = true;
    long a = 0, b = 0;
    const int n = std::max(mu.length(), nu.length());
    for (int i = 0; i < n; ++i) {
        a += mu.part(i);
        b += nu.part(i);
        if (a < b) ge = false;
        if (a > b) le = false;
    }
    if (ge) return Dominance::greater;
    if (le) return Dominance::less;
    return Dominance::incomparable;
}

std::vector<Partition> partitions_of(int n, int max) {
    if (n < 0 || n > max)
        throw CapacityError("partitions_of: n = " + std::to_string(n) + " out of range");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Partition> partitions_of_with_parts(int n, const std::vector<int>& allowed) {
    std::vector<int> vals = allowed;
    std::sort(vals.begin(), vals.end(), std::greater<>());
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, std::size_t)> rec = [&](int rest, std::size_t from) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (std::size_t j = from; j < vals.size(); ++j) {
            if (vals[j] > rest) continue;
            cur.push_back(vals[j]);
            rec(rest - vals[j], j);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(n, 0);
    return out;
}

std::vector<long> partition_counts(int max_n) {
    std::vector<long> p(static_cast<std::size_t>(max_n) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        long acc = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            const long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= n) acc += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) acc += sign * p[static_cast<std::size_t>(n - g2)];
        }
        p[static_cast<std::size_t>(n)] = acc;
    }
    return p;
}

} // namespace ugnsr
