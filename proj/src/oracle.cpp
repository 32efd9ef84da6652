#include "aronson/oracle.hpp"

#include "aronson/bfile.hpp"

#include <algorithm>
#include <mutex>

namespace aronson {

struct MembershipOracle::Impl {
    virtual ~Impl() = default;
    virtual bool contains(Term x) const = 0;
    virtual Term next_member(Term x) const { return scan(x, true); }
    virtual Term next_nonmember(Term x) const { return scan(x, false); }
    virtual Term universe_start() const { return 0; }
    virtual std::string name() const = 0;

  protected:
    Term scan(Term x, bool want_member) const {
        // Every supported set has small gaps; the guard only trips on a
        // degenerate oracle (e.g. an empty complement).
        for (Term y = x, guard = 0; guard < (Term{1} << 24); ++y, ++guard)
            if (contains(y) == want_member) return y;
        throw HorizonExceeded("no " + std::string(want_member ? "member" : "non-member")
                              + " of " + name() + " found near " + std::to_string(x));
    }
};

namespace {

using Impl = MembershipOracle::Impl;

void check_domain(const Impl& o, Term x) {
    if (x < o.universe_start())
        throw std::domain_error("oracle " + o.name() + " queried below universe start "
                                + std::to_string(o.universe_start()));
}

struct ParityImpl : Impl {
    explicit ParityImpl(int residue) : residue_(residue) {}
    bool contains(Term x) const override { return x % 2 == residue_; }
    Term next_member(Term x) const override { return x % 2 == residue_ ? x : x + 1; }
    Term next_nonmember(Term x) const override { return x % 2 == residue_ ? x + 1 : x; }
    std::string name() const override { return residue_ ? "odds" : "evens"; }
    int residue_;
};

struct MultiplesImpl : Impl {
    explicit MultiplesImpl(Term m) : m_(m) {
        if (m < 1) throw InvalidParameters("multiples(m) requires m >= 1");
    }
    bool contains(Term x) const override { return x >= m_ && x % m_ == 0; }
    Term next_member(Term x) const override {
        if (x <= m_) return m_;
        return ((x + m_ - 1) / m_) * m_;
    }
    Term next_nonmember(Term x) const override {
        if (m_ == 1) return Impl::next_nonmember(x);  // complement empty over P
        return contains(x) ? x + 1 : x;
    }
    std::string name() const override { return "multiples(" + std::to_string(m_) + ")"; }
    Term m_;
};

struct ResidueImpl : Impl {
    ResidueImpl(Term y, Term z) : y_(y), z_(z) {
        if (y < 2) throw InvalidParameters("residue(y,z) requires y >= 2");
    }
    bool contains(Term x) const override {
        return x >= y_ + z_ && (x - z_) % y_ == 0;
    }
    Term next_member(Term x) const override {
        if (x <= y_ + z_) return y_ + z_;
        Term i = (x - z_ + y_ - 1) / y_;
        return checked_add(checked_mul(i, y_), z_);
    }
    std::string name() const override {
        return "residue(" + std::to_string(y_) + "," + std::to_string(z_) + ")";
    }
    Term y_, z_;
};

struct ModFamilySetImpl : Impl {
    ModFamilySetImpl(Term y, Term z) : res_(y, z), hi_((y + z - 1) / 2) {
        if ((y + z) % 2 == 0)
            throw InvalidParameters("mod_family_set(y,z) requires y, z of opposite parity");
    }
    bool contains(Term x) const override {
        if (hi_ > 1 && x >= 2 && x <= hi_) return true;
        return res_.contains(x);
    }
    Term next_member(Term x) const override {
        if (hi_ > 1 && x <= hi_) return std::max<Term>(x, 2);
        return res_.next_member(x);
    }
    std::string name() const override {
        return "mod_family_set(" + std::to_string(res_.y_) + "," + std::to_string(res_.z_) + ")";
    }
    ResidueImpl res_;
    Term hi_;
};

struct SquaresImpl : Impl {
    bool contains(Term x) const override {
        if (x < 0) return false;
        Term r = isqrt(x);
        return r * r == x;
    }
    Term next_member(Term x) const override {
        if (x <= 0) return 0;
        Term r = isqrt(x - 1) + 1;
        return checked_mul(r, r);
    }
    std::string name() const override { return "squares"; }
};

struct TriangularImpl : Impl {
    bool contains(Term x) const override {
        if (x < 0) return false;
        Term r = isqrt(checked_add(checked_mul(8, x), 1));
        return r * r == 8 * x + 1;
    }
    Term next_member(Term x) const override {
        if (x <= 0) return 0;
        // smallest k with k(k+1)/2 >= x
        Term k = (isqrt(checked_mul(8, x)) - 1) / 2;
        while (k * (k + 1) / 2 < x) ++k;
        return k * (k + 1) / 2;
    }
    std::string name() const override { return "triangular"; }
};

// Growable sieve shared by every primes() oracle; mutex-guarded so oracles
// stay safe for concurrent queries.
class PrimeCache {
  public:
    bool is_prime(Term x) {
        if (x < 2) return false;
        std::lock_guard<std::mutex> lock(mu_);
        ensure(x);
        return std::binary_search(primes_.begin(), primes_.end(), x);
    }
    Term next_prime(Term x) {
        if (x <= 2) return 2;
        std::lock_guard<std::mutex> lock(mu_);
        while (true) {
            ensure(x);
            auto it = std::lower_bound(primes_.begin(), primes_.end(), x);
            if (it != primes_.end()) return *it;
            ensure(limit_ * 2);
        }
    }

  private:
    void ensure(Term x) {
        if (x <= limit_) return;
        Term new_limit = std::max(limit_ * 2, x + 64);
        std::vector<bool> composite(static_cast<std::size_t>(new_limit) + 1, false);
        primes_.clear();
        for (Term p = 2; p <= new_limit; ++p) {
            if (composite[static_cast<std::size_t>(p)]) continue;
            primes_.push_back(p);
            for (Term q = p * p; q >= 0 && q <= new_limit; q += p)
                composite[static_cast<std::size_t>(q)] = true;
        }
        limit_ = new_limit;
    }

    std::mutex mu_;
    std::vector<Term> primes_ = {2, 3};
    Term limit_ = 3;
};

PrimeCache& prime_cache() {
    static PrimeCache cache;
    return cache;
}

struct PrimesImpl : Impl {
    bool contains(Term x) const override { return prime_cache().is_prime(x); }
    Term next_member(Term x) const override { return prime_cache().next_prime(x); }
    std::string name() const override { return "primes"; }
};

struct LowerWythoffImpl : Impl {
    bool contains(Term x) const override {
        if (x < 1) return false;
        // x = floor(n*phi) exactly when n = floor((x+1)/phi) maps back to x,
        // and floor(m/phi) = floor(m*(phi-1)) = floor_phi(m) - m.
        Term m = x + 1;
        Term n = floor_phi(m) - m;
        return n >= 1 && floor_phi(n) == x;
    }
    std::string name() const override { return "lower_wythoff"; }
};

struct IntegersImpl : Impl {
    explicit IntegersImpl(Term from) : from_(from) {}
    bool contains(Term x) const override { return x >= from_; }
    Term next_member(Term x) const override { return std::max(x, from_); }
    Term next_nonmember(Term) const override {
        throw HorizonExceeded("integers(" + std::to_string(from_) + ") has empty complement");
    }
    Term universe_start() const override { return from_; }
    std::string name() const override { return "integers(" + std::to_string(from_) + ")"; }
    Term from_;
};

struct ComplementImpl : Impl {
    explicit ComplementImpl(MembershipOracle inner) : inner_(std::move(inner)) {}
    bool contains(Term x) const override { return !inner_.contains(x); }
    Term next_member(Term x) const override { return inner_.next_nonmember(x); }
    Term next_nonmember(Term x) const override { return inner_.next_member(x); }
    Term universe_start() const override { return inner_.universe_start(); }
    std::string name() const override { return "complement(" + inner_.name() + ")"; }
    MembershipOracle inner_;
};

struct FromSequenceImpl : Impl {
    explicit FromSequenceImpl(GeneratedSequence seq) : seq_(std::move(seq)) {
        if (!seq_.provenance().monotone)
            throw NonMonotoneInput("from_sequence oracle requires a strictly increasing sequence");
        if (seq_.empty()) throw InvalidParameters("from_sequence oracle requires a nonempty prefix");
    }
    Term horizon() const { return seq_.terms().back(); }
    bool contains(Term x) const override {
        if (x > horizon())
            throw HorizonExceeded("membership of " + std::to_string(x) + " in " + name()
                                  + " undecidable beyond value horizon "
                                  + std::to_string(horizon()));
        return seq_.contains_value(x);
    }
    Term next_member(Term x) const override {
        auto t = seq_.terms();
        auto it = std::lower_bound(t.begin(), t.end(), x);
        if (it == t.end())
            throw HorizonExceeded("next member of " + name() + " beyond value horizon");
        return *it;
    }
    Term universe_start() const override { return std::min<Term>(seq_.n0(), seq_.terms().front()); }
    std::string name() const override { return "seq(" + seq_.provenance().generator + ")"; }
    GeneratedSequence seq_;
};

struct IntervalsImpl : Impl {
    IntervalsImpl(std::vector<std::pair<Term, Term>> iv, Term start, Term limit, std::string nm)
        : iv_(std::move(iv)), start_(start), limit_(limit), name_(std::move(nm)) {}
    bool contains(Term x) const override {
        if (x > limit_)
            throw HorizonExceeded("membership of " + std::to_string(x) + " in " + name_
                                  + " undecidable beyond horizon " + std::to_string(limit_));
        auto it = std::upper_bound(iv_.begin(), iv_.end(), x,
                                   [](Term v, const auto& p) { return v < p.first; });
        if (it == iv_.begin()) return false;
        --it;
        return x <= it->second;
    }
    Term next_member(Term x) const override {
        auto it = std::upper_bound(iv_.begin(), iv_.end(), x,
                                   [](Term v, const auto& p) { return v < p.first; });
        if (it != iv_.begin() && x <= std::prev(it)->second) return x;
        if (it == iv_.end())
            throw HorizonExceeded("next member of " + name_ + " beyond horizon");
        return it->first;
    }
    Term next_nonmember(Term x) const override {
        auto it = std::upper_bound(iv_.begin(), iv_.end(), x,
                                   [](Term v, const auto& p) { return v < p.first; });
        Term y = x;
        if (it != iv_.begin() && x <= std::prev(it)->second) y = std::prev(it)->second + 1;
        if (y > limit_)
            throw HorizonExceeded("next non-member of " + name_ + " beyond horizon");
        return y;
    }
    Term universe_start() const override { return start_; }
    std::string name() const override { return name_; }
    std::vector<std::pair<Term, Term>> iv_;
    Term start_, limit_;
    std::string name_;
};

}  // namespace

bool MembershipOracle::contains(Term x) const {
    check_domain(*impl_, x);
    return impl_->contains(x);
}

Term MembershipOracle::next_member(Term x) const {
    check_domain(*impl_, x);
    return impl_->next_member(x);
}

Term MembershipOracle::next_nonmember(Term x) const {
    check_domain(*impl_, x);
    return impl_->next_nonmember(x);
}

Term MembershipOracle::universe_start() const { return impl_->universe_start(); }

std::string MembershipOracle::name() const { return impl_->name(); }

MembershipOracle MembershipOracle::odds() {
    return MembershipOracle(std::make_shared<ParityImpl>(1));
}
MembershipOracle MembershipOracle::evens() {
    return MembershipOracle(std::make_shared<ParityImpl>(0));
}
MembershipOracle MembershipOracle::multiples(Term m) {
    return MembershipOracle(std::make_shared<MultiplesImpl>(m));
}
MembershipOracle MembershipOracle::residue(Term y, Term z) {
    return MembershipOracle(std::make_shared<ResidueImpl>(y, z));
}
MembershipOracle MembershipOracle::mod_family_set(Term y, Term z) {
    return MembershipOracle(std::make_shared<ModFamilySetImpl>(y, z));
}
MembershipOracle MembershipOracle::squares() {
    return MembershipOracle(std::make_shared<SquaresImpl>());
}
MembershipOracle MembershipOracle::triangular() {
    return MembershipOracle(std::make_shared<TriangularImpl>());
}
MembershipOracle MembershipOracle::primes() {
    return MembershipOracle(std::make_shared<PrimesImpl>());
}
MembershipOracle MembershipOracle::lower_wythoff() {
    return MembershipOracle(std::make_shared<LowerWythoffImpl>());
}
MembershipOracle MembershipOracle::integers(Term from) {
    return MembershipOracle(std::make_shared<IntegersImpl>(from));
}
MembershipOracle MembershipOracle::complement(MembershipOracle inner) {
    return MembershipOracle(std::make_shared<ComplementImpl>(std::move(inner)));
}
MembershipOracle MembershipOracle::from_sequence(GeneratedSequence seq) {
    return MembershipOracle(std::make_shared<FromSequenceImpl>(std::move(seq)));
}
MembershipOracle MembershipOracle::from_bfile(const std::string& path) {
    return from_sequence(read_bfile(path));
}
MembershipOracle MembershipOracle::from_intervals(std::vector<std::pair<Term, Term>> intervals,
                                                  Term start, Term covered_limit,
                                                  std::string name) {
    return MembershipOracle(std::make_shared<IntervalsImpl>(std::move(intervals), start,
                                                            covered_limit, std::move(name)));
}

}  // namespace aronson
