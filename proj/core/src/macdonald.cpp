#include "ugnsr/macdonald.hpp"

#include <filesystem>
#include <fstream>
#include <mutex>

#include "ugnsr/errors.hpp"
#include "ugnsr/vertex.hpp"

namespace ugnsr {

MacdonaldEngine::MacdonaldEngine(int max_degree, std::string cache_dir)
    : max_degree_(max_degree), cache_dir_(std::move(cache_dir)) {}

const MacdonaldPoly& MacdonaldEngine::macdonald(const Partition& mu) {
    std::lock_guard<std::recursive_mutex> lock(mtx_);
    auto it = cache_.find(mu);
    if (it != cache_.end()) return it->second;
    if (mu.weight() > max_degree_)
        throw CapacityError("macdonald: |mu| = " + std::to_string(mu.weight()) +
                            " exceeds the configured maximum " + std::to_string(max_degree_));
    if (auto loaded = load_from_disk(mu))
        return cache_.emplace(mu, std::move(*loaded)).first->second;
    MacdonaldPoly p = construct(mu);
    store_to_disk(p);
    return cache_.emplace(mu, std::move(p)).first->second;
}

MacdonaldPoly MacdonaldEngine::construct(const Partition& mu) {
    // Gram-Schmidt along a linear extension of dominance (the canonical
    // partition order refines dominance within a weight): subtract the
    // projection onto every previously built P_nu of the same weight. The
    // result is the unique scalar-product-orthogonal family with m-basis
    // leading coefficient 1, i.e. Macdonald's.
    const int n = mu.weight();
    std::vector<Partition> earlier = partitions_of(n);
    std::sort(earlier.begin(), earlier.end());

    // The previously built P_nu are pairwise orthogonal, so every projection
    // coefficient can be taken against the original m_mu: subtracting one
    // projection does not disturb the others.
    const SymFunc m_mu =
        basis_change(SymFunc::single(mu, RatFunc(1L)), Basis::m, Basis::p, max_degree_);
    SymFunc v = m_mu;
    for (const Partition& nu : earlier) {
        if (!(nu < mu)) break;
        const MacdonaldPoly& pn = macdonald(nu);
        const RatFunc overlap = macdonald_inner(m_mu, pn.expansion);
        if (overlap.is_zero()) continue;
        const RatFunc norm = macdonald_inner(pn.expansion, pn.expansion);
        SymFunc sub = pn.expansion;
        sub.scale(overlap / norm);
        v -= sub;
    }

    MacdonaldPoly out;
    out.mu = mu;
    out.expansion = v;
    out.m_expansion = basis_change(v, Basis::p, Basis::m, max_degree_);
    // Unitriangularity is a theorem for this construction; enforce it here so
    // a bad base change can never propagate silently.
    for (const auto& [nu, c] : out.m_expansion.terms()) {
        const Dominance rel = dominance_compare(nu, mu);
        if (rel == Dominance::equal) {
            if (c != RatFunc(1L))
                throw StructuralError("macdonald: leading m-coefficient is not 1");
        } else if (rel != Dominance::less) {
            throw StructuralError("macdonald: non-dominated term m[" + nu.to_string() +
                                  "] in P[" + mu.to_string() + "]");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Disk cache: one JSON object per partition, coefficients as canonical
// strings, content checksum; mismatches fall back to recomputation.
// ---------------------------------------------------------------------------

namespace {

constexpr int kCacheFormatVersion = 1;

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string serialize_terms(const SymFunc& f) {
    std::string s;
    for (const auto& [nu, c] : f.terms()) s += nu.to_string() + "=" + c.to_string() + ";";
    return s;
}

std::string cache_file_name(const std::string& dir, const Partition& mu) {
    std::string tag = mu.to_string();
    for (auto& ch : tag)
        if (ch == ',') ch = '_';
    if (tag.empty()) tag = "empty";
    return dir + "/P_" + tag + ".json";
}

} // namespace

std::optional<MacdonaldPoly> MacdonaldEngine::load_from_disk(const Partition& mu) const {
    if (cache_dir_.empty()) return std::nullopt;
    std::ifstream in(cache_file_name(cache_dir_, mu));
    if (!in) return std::nullopt;
    try {
        std::string line, body, checksum;
        int version = -1;
        MacdonaldPoly p;
        p.mu = mu;
        while (std::getline(in, line)) {
            const auto eq = line.find('\t');
            if (eq == std::string::npos) continue;
            const std::string key = line.substr(0, eq), val = line.substr(eq + 1);
            if (key == "version") {
                version = std::stoi(val);
            } else if (key == "p" || key == "m") {
                SymFunc f;
                std::size_t pos = 0;
                while (pos < val.size()) {
                    const auto semi = val.find(';', pos);
                    if (semi == std::string::npos) break;
                    const std::string entry = val.substr(pos, semi - pos);
                    pos = semi + 1;
                    const auto assign = entry.find('=');
                    f.set_coeff(Partition::parse(entry.substr(0, assign)),
                                RatFunc::parse(entry.substr(assign + 1)));
                }
                (key == "p" ? p.expansion : p.m_expansion) = f;
                body += key + ":" + val;
            } else if (key == "checksum") {
                checksum = val;
            }
        }
        if (version != kCacheFormatVersion) return std::nullopt;
        if (checksum != fnv1a_hex(body)) return std::nullopt;
        if (p.expansion.is_zero()) return std::nullopt;
        return p;
    } catch (const Error&) {
        return std::nullopt;
    }
}

void MacdonaldEngine::store_to_disk(const MacdonaldPoly& p) const {
    if (cache_dir_.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(cache_dir_, ec);
    if (ec) return;
    const std::string ps = serialize_terms(p.expansion);
    const std::string ms = serialize_terms(p.m_expansion);
    const std::string body = "p:" + ps + "m:" + ms;
    std::ofstream out(cache_file_name(cache_dir_, p.mu));
    if (!out) return;
    out << "version\t" << kCacheFormatVersion << "\n";
    out << "p\t" << ps << "\n";
    out << "m\t" << ms << "\n";
    out << "checksum\t" << fnv1a_hex(body) << "\n";
}

GradedOp eta_zero() {
    return GradedOp(0, Parity::even, "eta0", [](const SymFunc& f) {
        const int d = f.max_degree();
        VertexOp op;
        const RatFunc one(1L);
        for (int j = 1; j <= d; ++j) {
            // (1 - t^{-j}) p_j z^j / j  and  -(1 - q^j) d/dp_j z^{-j}
            op.up[j] = (one - RatFunc::symbol(Sym::t, -j)) / RatFunc(static_cast<long>(j));
            op.down[j] = -(one - RatFunc::symbol(Sym::q, j));
        }
        return vertex_mode_apply(op, 0, f);
    });
}

RatFunc macdonald_eigenvalue(const Partition& mu) {
    const RatFunc one(1L);
    RatFunc acc;
    for (int i = 1; i <= mu.length(); ++i)
        acc += (RatFunc::symbol(Sym::q, mu.part(i - 1)) - one) * RatFunc::symbol(Sym::t, -i);
    return one + (RatFunc::symbol(Sym::t) - one) * acc;
}

bool inversion_symmetric(const MacdonaldPoly& p) {
    const std::map<Sym, RatFunc> inv{{Sym::q, RatFunc::symbol(Sym::q, -1)},
                                     {Sym::t, RatFunc::symbol(Sym::t, -1)}};
    for (const auto& [nu, c] : p.m_expansion.terms())
        if (c.substitute(inv) != c) return false;
    return true;
}

} // namespace ugnsr
