#ifndef PAIRDEPTH_ENGINE_HPP
#define PAIRDEPTH_ENGINE_HPP

#include <cstddef>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pairdepth/pair_depth.hpp"

namespace pairdepth {

namespace detail {

inline std::size_t hash_mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

struct IdealModuleKey {
    MonomialIdeal ideal;
    Subquotient module;
    friend bool operator==(const IdealModuleKey&, const IdealModuleKey&) = default;
};

struct TripleKey {
    MonomialIdeal I;
    MonomialIdeal J;
    Subquotient module;
    friend bool operator==(const TripleKey&, const TripleKey&) = default;
};

struct IdealPairKey {
    MonomialIdeal I;
    MonomialIdeal J;
    friend bool operator==(const IdealPairKey&, const IdealPairKey&) = default;
};

struct KeyHash {
    std::size_t operator()(const IdealModuleKey& k) const noexcept {
        return hash_mix(MonomialIdealHash{}(k.ideal), SubquotientHash{}(k.module));
    }
    std::size_t operator()(const TripleKey& k) const noexcept {
        return hash_mix(hash_mix(MonomialIdealHash{}(k.I), MonomialIdealHash{}(k.J)), SubquotientHash{}(k.module));
    }
    std::size_t operator()(const IdealPairKey& k) const noexcept {
        return hash_mix(MonomialIdealHash{}(k.I), MonomialIdealHash{}(k.J));
    }
};

// Lookup-or-compute table. The value is computed outside the lock, so two
// threads may race on the same key; both produce the same value and the first
// insert wins.
template <class K, class V, class H = KeyHash>
class Memo {
public:
    template <class F>
    V get(const K& key, F&& compute) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            if (auto it = map_.find(key); it != map_.end()) {
                ++hits_;
                return it->second;
            }
        }
        V value = compute();
        std::lock_guard<std::mutex> lock(mu_);
        ++misses_;
        return map_.try_emplace(key, std::move(value)).first->second;
    }

    std::size_t hits() const {
        std::lock_guard<std::mutex> lock(mu_);
        return hits_;
    }
    std::size_t misses() const {
        std::lock_guard<std::mutex> lock(mu_);
        return misses_;
    }

private:
    mutable std::mutex mu_;
    std::unordered_map<K, V, H> map_;
    std::size_t hits_ = 0;
    std::size_t misses_ = 0;
};

}  // namespace detail

struct EngineStats {
    std::size_t hits = 0;
    std::size_t misses = 0;
};

/// Thread-safe memoizing front end over the homology and pair-depth modules.
/// Shared by the census so repeated (ideal, module) pairs are computed once.
class DepthEngine {
public:
    explicit DepthEngine(Field field = Field::rationals(), int enumeration_cap = kDefaultEnumerationCap);

    const Field& field() const { return field_; }
    int enumeration_cap() const { return cap_; }

    GradeResult grade(const MonomialIdeal& a, const Subquotient& module);
    GradeResult grade_via_ext(const MonomialIdeal& a, const Subquotient& module);
    NonvanishingProfile ext_profile(const MonomialIdeal& a, const Subquotient& module);
    bool ext_nonvanishing(const MonomialIdeal& a, const Subquotient& module, int i);
    GradeResult depth_at_prime(const MonomialPrime& prime, const Subquotient& module);

    std::shared_ptr<const WSet> w(const MonomialIdeal& I, const MonomialIdeal& J);
    std::shared_ptr<const DepthReport> pair_depth(const MonomialIdeal& I, const MonomialIdeal& J,
                                                  const Subquotient& module);
    ExtendedDepth depth(const MonomialIdeal& I, const MonomialIdeal& J, const Subquotient& module) {
        return pair_depth(I, J, module)->depth;
    }
    ExtendedDepth pair_depth_localized(const MonomialIdeal& I, const MonomialIdeal& J, const Subquotient& module);
    bool is_cm(const MonomialIdeal& I, const MonomialIdeal& J, const Subquotient& module) {
        return pair_depth(I, J, module)->is_cm;
    }

    int dim(const Subquotient& module);
    int dim_mod(const Subquotient& module, const MonomialIdeal& J) { return dim(module_mod_ideal(module, J)); }
    std::shared_ptr<const std::vector<MonomialPrime>> ass(const Subquotient& module);

    EngineStats stats() const;

private:
    Field field_;
    int cap_;
    detail::Memo<detail::IdealModuleKey, GradeResult> koszul_;
    detail::Memo<detail::IdealModuleKey, NonvanishingProfile> ext_;
    detail::Memo<detail::IdealModuleKey, GradeResult> local_;
    detail::Memo<detail::IdealPairKey, std::shared_ptr<const WSet>> w_;
    detail::Memo<detail::TripleKey, std::shared_ptr<const DepthReport>> depth_;
    detail::Memo<detail::TripleKey, ExtendedDepth> localized_;
    detail::Memo<Subquotient, int, SubquotientHash> dim_;
    detail::Memo<Subquotient, std::shared_ptr<const std::vector<MonomialPrime>>, SubquotientHash> ass_;
};

}  // namespace pairdepth

#endif  // PAIRDEPTH_ENGINE_HPP
