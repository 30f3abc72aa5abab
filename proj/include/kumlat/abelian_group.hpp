#pragma once

#include <kumlat/normal_forms.hpp>

#include <string>
#include <vector>

namespace kumlat {

/// Finitely generated abelian group Z^free_rank + Z/d1 + ... + Z/dk with
/// d1 | d2 | ... | dk and every di >= 2. Two groups compare equal exactly
/// when they are isomorphic.
class FGAbelianGroup {
public:
    FGAbelianGroup() = default;

    /// Normalizes an arbitrary list of cyclic orders. Orders of 1 are
    /// dropped, 0 counts as a free summand.
    static FGAbelianGroup from_cyclic(std::size_t free_rank, const IntVector& orders) {
        IntVector finite;
        for (const auto& o : orders) {
            if (o < 0) throw error("negative cyclic order");
            if (o == 0)
                ++free_rank;
            else if (o != 1)
                finite.push_back(o);
        }
        FGAbelianGroup g;
        g.free_rank_ = free_rank;
        if (!finite.empty()) {
            for (const auto& d : elementary_divisors(IntMatrix::diagonal(finite)))
                if (d != 1) g.torsion_.push_back(d);
        }
        return g;
    }

    static FGAbelianGroup from_cyclic(std::size_t free_rank, std::initializer_list<long> orders) {
        IntVector v;
        for (long o : orders) v.emplace_back(o);
        return from_cyclic(free_rank, v);
    }

    static FGAbelianGroup trivial() { return {}; }
    static FGAbelianGroup integers(std::size_t rank = 1) { return from_cyclic(rank, IntVector{}); }
    static FGAbelianGroup cyclic(const Integer& n) { return from_cyclic(0, IntVector{n}); }

    /// Cokernel Z^cols / rowspace(A).
    static FGAbelianGroup cokernel(const IntMatrix& A) {
        auto d = snf(A).diagonal();
        d.resize(A.cols(), Integer(0));
        return from_cyclic(0, d);
    }

    std::size_t free_rank() const { return free_rank_; }
    const IntVector& torsion() const { return torsion_; }

    bool is_finite() const { return free_rank_ == 0; }
    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }

    /// Order of a finite group.
    Integer order() const {
        if (!is_finite()) throw error("order of an infinite group");
        Integer o = 1;
        for (const auto& d : torsion_) o *= d;
        return o;
    }

    /// Direct sum.
    friend FGAbelianGroup operator+(const FGAbelianGroup& a, const FGAbelianGroup& b) {
        IntVector t = a.torsion_;
        t.insert(t.end(), b.torsion_.begin(), b.torsion_.end());
        return from_cyclic(a.free_rank_ + b.free_rank_, t);
    }

    friend bool operator==(const FGAbelianGroup& a, const FGAbelianGroup& b) {
        return a.free_rank_ == b.free_rank_ && a.torsion_ == b.torsion_;
    }

    /// "0", "Z", "Z^2", "Z/2", "(Z/2)^3", "Z/2 x Z/4", ...
    std::string to_string() const {
        std::vector<std::string> parts;
        if (free_rank_ == 1)
            parts.push_back("Z");
        else if (free_rank_ > 1)
            parts.push_back("Z^" + std::to_string(free_rank_));
        for (std::size_t i = 0; i < torsion_.size();) {
            std::size_t j = i;
            while (j < torsion_.size() && torsion_[j] == torsion_[i]) ++j;
            const std::string c = "Z/" + torsion_[i].str();
            parts.push_back(j - i == 1 ? c : "(" + c + ")^" + std::to_string(j - i));
            i = j;
        }
        if (parts.empty()) return "0";
        std::string s = parts[0];
        for (std::size_t k = 1; k < parts.size(); ++k) s += " x " + parts[k];
        return s;
    }

private:
    std::size_t free_rank_ = 0;
    IntVector torsion_;
};

}  // namespace kumlat
