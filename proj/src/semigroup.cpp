#include "hvar/semigroup.hpp"

#include "hvar/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hvar {

namespace {

// Hard cap on any window an ideal computation may need.
constexpr std::int64_t kWindowCap = std::int64_t{1} << 24;

void check_window(std::int64_t w) {
    if (w > kWindowCap) throw WindowOverflow("semigroup window " + std::to_string(w) + " exceeds the cap");
}

}  // namespace

std::shared_ptr<const NumericalSemigroup> NumericalSemigroup::make(std::vector<std::int64_t> gens) {
    if (gens.empty()) throw InputError("a numerical semigroup needs generators");
    std::int64_t g = 0;
    for (auto x : gens) {
        if (x < 1) throw InputError("semigroup generators must be positive");
        g = std::gcd(g, x);
    }
    if (g != 1) throw NotCoprime("semigroup generators have gcd " + std::to_string(g));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    auto h = std::make_shared<NumericalSemigroup>();
    const std::int64_t m = gens.front();
    // Membership by dynamic programming until m consecutive members appear;
    // from there on every integer is a member.
    std::vector<bool> member{true};
    std::int64_t run = 1;
    std::int64_t x = 0;
    while (run < m) {
        ++x;
        check_window(x);
        bool in = false;
        for (auto gen : gens) {
            if (gen <= x && member[static_cast<std::size_t>(x - gen)]) {
                in = true;
                break;
            }
        }
        member.push_back(in);
        run = in ? run + 1 : 0;
    }
    const std::int64_t conductor = x - m + 1;
    member.resize(static_cast<std::size_t>(conductor));
    h->conductor_ = conductor;
    h->member_ = std::move(member);

    // Minimal generators: members that are not sums of two nonzero members.
    for (auto gen : gens) {
        bool decomposable = false;
        for (std::int64_t a = 1; a <= gen / 2 && !decomposable; ++a) {
            decomposable = h->contains(a) && h->contains(gen - a);
        }
        if (!decomposable) h->generators_.push_back(gen);
    }
    return h;
}

bool NumericalSemigroup::contains(std::int64_t x) const {
    if (x < 0) return false;
    if (x >= conductor_) return true;
    return member_[static_cast<std::size_t>(x)];
}

std::vector<std::int64_t> NumericalSemigroup::gaps() const {
    std::vector<std::int64_t> out;
    for (std::int64_t x = 0; x < conductor_; ++x) {
        if (!contains(x)) out.push_back(x);
    }
    return out;
}

std::vector<std::int64_t> NumericalSemigroup::apery(std::int64_t e) const {
    if (e <= 0 || !contains(e)) throw InputError("Apery set needs a positive element of H");
    std::vector<std::int64_t> out;
    for (std::int64_t w = 0; static_cast<std::int64_t>(out.size()) < e; ++w) {
        check_window(w);
        if (contains(w) && !contains(w - e)) out.push_back(w);
    }
    return out;
}

std::vector<std::int64_t> NumericalSemigroup::pseudo_frobenius() const {
    std::vector<std::int64_t> out;
    for (auto x : gaps()) {
        bool pf = true;
        for (auto g : generators_) {
            if (!contains(x + g)) {
                pf = false;
                break;
            }
        }
        if (pf) out.push_back(x);
    }
    return out;
}

bool NumericalSemigroup::is_symmetric() const {
    const std::int64_t f = frobenius();
    for (std::int64_t z = 0; z <= f; ++z) {
        if (contains(z) == contains(f - z)) return false;
    }
    return true;
}

namespace {

std::vector<std::int64_t> minimal_ideal_gens(const NumericalSemigroup& h, std::vector<std::int64_t> raw) {
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<std::int64_t> out;
    for (auto x : raw) {
        bool redundant = false;
        for (auto y : out) {
            if (h.contains(x - y)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) out.push_back(x);
    }
    return out;
}

void require_same_ring(const SemigroupIdeal& a, const SemigroupIdeal& b) {
    if (a.ambient() != b.ambient() &&
        (!a.ambient() || !b.ambient() || a.ambient()->generators() != b.ambient()->generators())) {
        throw InputError("semigroup ideals live in different rings");
    }
}

}  // namespace

SemigroupIdeal SemigroupIdeal::make(SemigroupPtr ambient, std::vector<std::int64_t> gens) {
    if (!ambient) throw InputError("semigroup ideal without a ring");
    if (gens.empty()) throw InputError("an ideal needs at least one generator");
    for (auto g : gens) {
        if (!ambient->contains(g)) throw InputError("generator " + std::to_string(g) + " is not in the semigroup");
    }
    SemigroupIdeal out;
    out.gens_ = minimal_ideal_gens(*ambient, std::move(gens));
    out.ambient_ = std::move(ambient);
    return out;
}

SemigroupIdeal SemigroupIdeal::maximal(SemigroupPtr ambient) {
    auto gens = ambient->generators();
    return make(std::move(ambient), std::move(gens));
}

SemigroupIdeal SemigroupIdeal::unit(SemigroupPtr ambient) { return make(std::move(ambient), {0}); }

bool SemigroupIdeal::contains(std::int64_t x) const {
    for (auto g : gens_) {
        if (g > x) break;
        if (ambient_->contains(x - g)) return true;
    }
    return false;
}

bool SemigroupIdeal::contains(const SemigroupIdeal& other) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](std::int64_t g) { return contains(g); });
}

std::int64_t SemigroupIdeal::conductor() const {
    std::int64_t w = gens_.front() + ambient_->conductor();
    check_window(w);
    while (w > 0 && contains(w - 1)) --w;
    return w;
}

std::int64_t SemigroupIdeal::colength() const {
    const std::int64_t w = conductor();
    std::int64_t count = 0;
    for (std::int64_t x = 0; x < w; ++x) {
        if (ambient_->contains(x) && !contains(x)) ++count;
    }
    return count;
}

SemigroupIdeal sum(const SemigroupIdeal& a, const SemigroupIdeal& b) {
    require_same_ring(a, b);
    std::vector<std::int64_t> raw = a.gens();
    raw.insert(raw.end(), b.gens().begin(), b.gens().end());
    return SemigroupIdeal::make(a.ambient(), std::move(raw));
}

SemigroupIdeal product(const SemigroupIdeal& a, const SemigroupIdeal& b) {
    require_same_ring(a, b);
    std::vector<std::int64_t> raw;
    for (auto x : a.gens()) {
        for (auto y : b.gens()) raw.push_back(x + y);
    }
    return SemigroupIdeal::make(a.ambient(), std::move(raw));
}

SemigroupIdeal power(const SemigroupIdeal& a, int n) {
    if (n < 0) throw InputError("negative ideal power");
    SemigroupIdeal out = SemigroupIdeal::unit(a.ambient());
    for (int k = 0; k < n; ++k) out = product(out, a);
    return out;
}

SemigroupIdeal colon(const SemigroupIdeal& e, const SemigroupIdeal& f) {
    require_same_ring(e, f);
    const auto& h = *e.ambient();
    const std::int64_t ce = e.conductor();
    // Every a >= ce qualifies, so minimal generators lie below ce + multiplicity.
    const std::int64_t window = ce + h.multiplicity();
    check_window(window);
    std::vector<bool> in(static_cast<std::size_t>(window), false);
    for (std::int64_t a = 0; a < window; ++a) {
        if (!h.contains(a)) continue;
        bool ok = a >= ce;
        if (!ok) {
            ok = std::all_of(f.gens().begin(), f.gens().end(), [&](std::int64_t g) { return e.contains(a + g); });
        }
        in[static_cast<std::size_t>(a)] = ok;
    }
    std::vector<std::int64_t> gens;
    for (std::int64_t a = 0; a < window; ++a) {
        if (!in[static_cast<std::size_t>(a)]) continue;
        bool minimal = true;
        for (auto g : h.generators()) {
            if (a - g >= 0 && in[static_cast<std::size_t>(a - g)]) {
                minimal = false;
                break;
            }
        }
        if (minimal) gens.push_back(a);
    }
    return SemigroupIdeal::make(e.ambient(), std::move(gens));
}

std::int64_t relative_length(const SemigroupIdeal& a, const SemigroupIdeal& b) {
    require_same_ring(a, b);
    if (!a.contains(b)) throw InputError("relative length needs B inside A");
    return b.colength() - a.colength();
}

SemigroupIdeal canonical_ideal(const SemigroupPtr& h) {
    const std::int64_t f = h->frobenius();
    // Elements of K in [0, f]; everything above f is in K.
    std::vector<std::int64_t> k_low;
    for (std::int64_t x = 0; x <= f; ++x) {
        if (!h->contains(f - x)) k_low.push_back(x);
    }
    std::int64_t shift = 0;
    for (;; ++shift) {
        check_window(shift);
        bool inside = std::all_of(k_low.begin(), k_low.end(), [&](std::int64_t x) { return h->contains(x + shift); });
        // x > f gives x + shift >= conductor, which is always inside.
        if (inside) break;
    }
    std::vector<std::int64_t> raw;
    for (auto x : k_low) raw.push_back(x + shift);
    for (std::int64_t x = f + 1; x <= f + h->multiplicity(); ++x) raw.push_back(x + shift);
    return SemigroupIdeal::make(h, std::move(raw));
}

}  // namespace hvar
