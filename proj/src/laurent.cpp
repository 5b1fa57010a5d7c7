#include "weylchar/laurent.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

#include <absl/container/flat_hash_map.h>

namespace weylchar {

// ---------------------------------------------------------------------------
// Exponent

Exponent Exponent::from(const std::vector<std::int64_t>& values) {
    if (values.size() > static_cast<std::size_t>(kMaxRank)) {
        throw InvalidArgument("exponent vector longer than the maximal rank");
    }
    Exponent e;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] > std::numeric_limits<std::int32_t>::max() ||
            values[i] < std::numeric_limits<std::int32_t>::min()) {
            throw InvalidArgument("exponent out of 32-bit range");
        }
        e.v[i] = static_cast<std::int32_t>(values[i]);
    }
    return e;
}

Exponent Exponent::unit(int i) {
    Exponent e;
    e[i] = 1;
    return e;
}

std::int64_t Exponent::degree() const {
    std::int64_t s = 0;
    for (auto x : v) s += x;
    return s;
}

bool Exponent::is_zero() const {
    return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

std::vector<std::int64_t> Exponent::to_vector(int nvars) const {
    return std::vector<std::int64_t>(v.begin(), v.begin() + nvars);
}

Exponent& Exponent::operator+=(const Exponent& o) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
    return *this;
}

Exponent& Exponent::operator-=(const Exponent& o) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.v[i];
    return *this;
}

Exponent operator-(Exponent a) {
    for (auto& x : a.v) x = -x;
    return a;
}

Exponent operator*(std::int64_t k, Exponent a) {
    for (auto& x : a.v) x = static_cast<std::int32_t>(k * x);
    return a;
}

std::size_t ExponentHash::operator()(const Exponent& e) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : e.v) {
        h ^= static_cast<std::uint32_t>(x);
        h *= 0xff51afd7ed558ccdULL;
        h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
}

std::strong_ordering grlex_compare(const Exponent& a, const Exponent& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t i = 0; i < a.v.size(); ++i) {
        if (auto c = a.v[i] <=> b.v[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(int nvars) : nvars_(nvars) {
    if (nvars < 0 || nvars > kMaxRank) throw InvalidArgument("LaurentPolynomial: bad variable count");
}

LaurentPolynomial LaurentPolynomial::constant(int nvars, const Integer& c) {
    return monomial(nvars, Exponent{}, c);
}

LaurentPolynomial LaurentPolynomial::monomial(int nvars, const Exponent& e, const Integer& c) {
    LaurentPolynomial p(nvars);
    p.add_term(e, c);
    return p;
}

LaurentPolynomial LaurentPolynomial::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw InvalidArgument("LaurentPolynomial: variable index out of range");
    return monomial(nvars, Exponent::unit(i));
}

Integer LaurentPolynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPolynomial::add_term(const Exponent& e, const Integer& c) {
    if (c == 0) return;
    for (int i = nvars_; i < kMaxRank; ++i) {
        if (e[i] != 0) throw InvalidArgument("exponent uses a variable beyond nvars");
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::vector<LaurentPolynomial::Term> LaurentPolynomial::terms() const {
    std::vector<Term> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const Term& a, const Term& b) { return grlex_compare(a.first, b.first) > 0; });
    return out;
}

LaurentPolynomial::Term LaurentPolynomial::leading_term() const {
    if (terms_.empty()) throw InvalidArgument("leading_term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        if (grlex_compare(it->first, best->first) > 0) best = it;
    }
    return *best;
}

LaurentPolynomial::Term LaurentPolynomial::trailing_term() const {
    if (terms_.empty()) throw InvalidArgument("trailing_term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        if (grlex_compare(it->first, best->first) < 0) best = it;
    }
    return *best;
}

LaurentPolynomial LaurentPolynomial::shifted(const Exponent& e) const {
    LaurentPolynomial out(nvars_);
    out.terms_.reserve(terms_.size());
    for (const auto& [x, c] : terms_) out.terms_.emplace(x + e, c);
    return out;
}

LaurentPolynomial LaurentPolynomial::scaled(const Integer& c) const {
    LaurentPolynomial out(nvars_);
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& [x, a] : terms_) out.terms_.emplace(x, a * c);
    return out;
}

void LaurentPolynomial::require_same(const LaurentPolynomial& o, const char* op) const {
    if (o.nvars_ != nvars_) {
        throw InvalidArgument(std::string("LaurentPolynomial ") + op + ": nvars mismatch (" +
                              std::to_string(nvars_) + " vs " + std::to_string(o.nvars_) + ")");
    }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    require_same(o, "add");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    require_same(o, "sub");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

namespace {

// Coefficient kernels run on __int128 while every intermediate fits and fall back to
// GMP on overflow. Character coefficients are almost always small.
using Wide = __int128;

struct WideOverflow {};

constexpr Wide kWideMin = static_cast<Wide>(static_cast<unsigned __int128>(1) << 127);

struct WideOps {
    using Coef = Wide;
    static bool load(const Integer& n, Wide& out) {
        if (!n.fits_slong_p()) return false;
        out = n.get_si();
        return true;
    }
    static void addmul(Wide& acc, const Wide& a, const Wide& b) {
        Wide p;
        if (__builtin_mul_overflow(a, b, &p) || __builtin_add_overflow(acc, p, &acc)) throw WideOverflow{};
    }
    static void submul(Wide& acc, const Wide& a, const Wide& b) {
        Wide p;
        if (__builtin_mul_overflow(a, b, &p) || __builtin_sub_overflow(acc, p, &acc)) throw WideOverflow{};
    }
    static bool divexact(const Wide& a, const Wide& b, Wide& q) {
        if (b == -1) {
            if (a == kWideMin) throw WideOverflow{};
            q = -a;
            return true;
        }
        q = a / b;
        return a % b == 0;
    }
    static bool is_zero(const Wide& a) { return a == 0; }
    static Integer store(const Wide& a) {
        if (a >= std::numeric_limits<long>::min() && a <= std::numeric_limits<long>::max()) {
            return Integer(static_cast<long>(a));
        }
        const bool negative = a < 0;
        auto m = negative ? static_cast<unsigned __int128>(-(a + 1)) + 1 : static_cast<unsigned __int128>(a);
        Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
        Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
        Integer out = (hi << 64) + lo;
        return negative ? Integer(-out) : out;
    }
};

struct BigOps {
    using Coef = Integer;
    static bool load(const Integer& n, Integer& out) {
        out = n;
        return true;
    }
    static void addmul(Integer& acc, const Integer& a, const Integer& b) {
        mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    static void submul(Integer& acc, const Integer& a, const Integer& b) {
        mpz_submul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    static bool divexact(const Integer& a, const Integer& b, Integer& q) {
        Integer r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return r == 0;
    }
    static bool is_zero(const Integer& a) { return a == 0; }
    static Integer store(const Integer& a) { return a; }
};

template <class Ops>
bool load_terms(const LaurentPolynomial& p, std::vector<std::pair<Exponent, typename Ops::Coef>>& out) {
    out.clear();
    out.reserve(p.size());
    for (const auto& [e, c] : p.term_map()) {
        typename Ops::Coef v;
        if (!Ops::load(c, v)) return false;
        out.emplace_back(e, v);
    }
    return true;
}

template <class Ops>
bool multiply_terms(const LaurentPolynomial& a, const LaurentPolynomial& b, LaurentPolynomial& out) {
    using Coef = typename Ops::Coef;
    std::vector<std::pair<Exponent, Coef>> small;
    std::vector<std::pair<Exponent, Coef>> large;
    const bool swap = a.size() > b.size();
    if (!load_terms<Ops>(swap ? b : a, small) || !load_terms<Ops>(swap ? a : b, large)) return false;
    absl::flat_hash_map<Exponent, Coef, ExponentHash> acc;
    acc.reserve(4 * (small.size() + large.size()));
    for (const auto& [es, cs] : small) {
        for (const auto& [el, cl] : large) Ops::addmul(acc[es + el], cs, cl);
    }
    for (const auto& [e, c] : acc) {
        if (!Ops::is_zero(c)) out.add_term(e, Ops::store(c));
    }
    return true;
}

}  // namespace

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    a.require_same(b, "mul");
    LaurentPolynomial out(a.nvars_);
    if (a.is_zero() || b.is_zero()) return out;
    try {
        if (multiply_terms<WideOps>(a, b, out)) return out;
    } catch (const WideOverflow&) {
    }
    out = LaurentPolynomial(a.nvars_);
    multiply_terms<BigOps>(a, b, out);
    return out;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
    *this = *this * o;
    return *this;
}

LaurentPolynomial operator-(const LaurentPolynomial& a) { return a.scaled(-1); }

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

std::string LaurentPolynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    auto var = [&](int i) {
        return static_cast<std::size_t>(i) < names.size() ? names[static_cast<std::size_t>(i)]
                                                          : "u" + std::to_string(i + 1);
    };
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms()) {
        const bool negative = c < 0;
        const Integer mag = negative ? Integer(-c) : c;
        if (first) os << (negative ? "-" : "");
        else os << (negative ? " - " : " + ");
        first = false;
        bool wrote = false;
        if (mag != 1 || e.is_zero()) {
            os << mag.get_str();
            wrote = true;
        }
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "·";
            os << var(i);
            if (e[i] != 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

LaurentPolynomial add(const LaurentPolynomial& p, const LaurentPolynomial& q) { return p + q; }
LaurentPolynomial mul(const LaurentPolynomial& p, const LaurentPolynomial& q) { return p * q; }
LaurentPolynomial neg(const LaurentPolynomial& p) { return -p; }

// ---------------------------------------------------------------------------
// Division

namespace {

std::string describe_term(int nvars, const Exponent& e, const Integer& c) {
    std::ostringstream os;
    os << c.get_str() << " at exponent [";
    for (int i = 0; i < nvars; ++i) os << (i ? "," : "") << e[i];
    os << "]";
    return os.str();
}

struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const { return grlex_compare(a, b) < 0; }
};

struct Box {
    std::array<std::int32_t, kMaxRank> lo{};
    std::array<std::int32_t, kMaxRank> hi{};
};

Box bounding_box(const LaurentPolynomial& p) {
    Box b;
    b.lo.fill(std::numeric_limits<std::int32_t>::max());
    b.hi.fill(std::numeric_limits<std::int32_t>::min());
    for (const auto& [e, c] : p.term_map()) {
        for (std::size_t i = 0; i < b.lo.size(); ++i) {
            b.lo[i] = std::min(b.lo[i], e.v[i]);
            b.hi[i] = std::max(b.hi[i], e.v[i]);
        }
    }
    return b;
}

}  // namespace

NonExactDivision::NonExactDivision(int nvars, Exponent exponent, Integer coefficient)
    : ConsistencyError("exact_div: non-exact division, remainder term " +
                       describe_term(nvars, exponent, coefficient)),
      exponent_(exponent),
      coefficient_(std::move(coefficient)) {}

namespace {

struct QuotientBox {
    std::array<std::int32_t, kMaxRank> lo{};
    std::array<std::int32_t, kMaxRank> hi{};

    bool contains(const Exponent& e) const {
        for (std::size_t i = 0; i < lo.size(); ++i) {
            if (e.v[i] < lo[i] || e.v[i] > hi[i]) return false;
        }
        return true;
    }
};

// Heap entry with the total degree cached, ordered grlex-ascending.
struct Ranked {
    std::int64_t degree;
    Exponent e;
};

struct RankedLess {
    bool operator()(const Ranked& a, const Ranked& b) const {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.e.v < b.e.v;
    }
};

template <class Ops>
bool divide_terms(const LaurentPolynomial& num, const LaurentPolynomial& den, const QuotientBox& box,
                  LaurentPolynomial& quotient) {
    using Coef = typename Ops::Coef;
    const int nvars = num.nvars();
    std::vector<std::pair<Exponent, Coef>> den_terms;
    std::vector<std::pair<Exponent, Coef>> num_terms;
    if (!load_terms<Ops>(den, den_terms) || !load_terms<Ops>(num, num_terms)) return false;
    const auto lead = den.leading_term();
    Coef lead_coef;
    Ops::load(lead.second, lead_coef);
    std::vector<std::int64_t> den_degrees;
    for (const auto& [e, c] : den_terms) den_degrees.push_back(e.degree());

    absl::flat_hash_map<Exponent, Coef, ExponentHash> rem(num_terms.begin(), num_terms.end());
    std::priority_queue<Ranked, std::vector<Ranked>, RankedLess> heap;
    for (const auto& [e, c] : num_terms) heap.push({e.degree(), e});

    Coef qc;
    while (!heap.empty()) {
        const Ranked top = heap.top();
        heap.pop();
        auto it = rem.find(top.e);
        if (it == rem.end()) continue;

        const Exponent qe = top.e - lead.first;
        const std::int64_t qdeg = top.degree - lead.first.degree();
        if (!box.contains(qe) || !Ops::divexact(it->second, lead_coef, qc)) {
            throw NonExactDivision(nvars, top.e, Ops::store(it->second));
        }
        quotient.add_term(qe, Ops::store(qc));
        for (std::size_t k = 0; k < den_terms.size(); ++k) {
            const Exponent target = qe + den_terms[k].first;
            auto [slot, inserted] = rem.try_emplace(target);
            Ops::submul(slot->second, qc, den_terms[k].second);
            if (Ops::is_zero(slot->second)) {
                rem.erase(slot);
            } else if (inserted) {
                heap.push({qdeg + den_degrees[k], target});
            }
        }
    }
    return true;
}

}  // namespace

LaurentPolynomial exact_div(const LaurentPolynomial& num, const LaurentPolynomial& den) {
    if (num.nvars() != den.nvars()) throw InvalidArgument("exact_div: nvars mismatch");
    if (den.is_zero()) throw InvalidArgument("exact_div: division by zero polynomial");
    const int nvars = num.nvars();
    LaurentPolynomial quotient(nvars);
    if (num.is_zero()) return quotient;

    // Any true quotient lies in the box [lo(num) - lo(den), hi(num) - hi(den)]
    // coordinate-wise; leaving it proves a nonzero remainder and bounds the loop.
    const Box nb = bounding_box(num);
    const Box db = bounding_box(den);
    QuotientBox qb;
    for (std::size_t i = 0; i < qb.lo.size(); ++i) {
        qb.lo[i] = nb.lo[i] - db.lo[i];
        qb.hi[i] = nb.hi[i] - db.hi[i];
    }
    try {
        if (divide_terms<WideOps>(num, den, qb, quotient)) return quotient;
    } catch (const WideOverflow&) {
    }
    quotient = LaurentPolynomial(nvars);
    divide_terms<BigOps>(num, den, qb, quotient);
    return quotient;
}

// ---------------------------------------------------------------------------
// Specialization

LaurentPolynomial specialize(const LaurentPolynomial& p, const std::vector<Exponent>& assignment,
                             int target_nvars) {
    if (static_cast<int>(assignment.size()) != p.nvars()) {
        throw InvalidArgument("specialize: assignment length must equal nvars");
    }
    LaurentPolynomial out(target_nvars);
    for (const auto& [e, c] : p.term_map()) {
        Exponent t;
        for (int i = 0; i < p.nvars(); ++i) {
            if (e[i] != 0) t += static_cast<std::int64_t>(e[i]) * assignment[static_cast<std::size_t>(i)];
        }
        out.add_term(t, c);
    }
    return out;
}

std::pair<std::vector<Exponent>, std::vector<std::string>> parse_merge_spec(const std::string& spec,
                                                                              int nvars) {
    std::vector<std::string> names;
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string item; std::getline(ss, item, ',');) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw InvalidArgument("specialization: empty variable name");
        parts.push_back(item.substr(b, e - b + 1));
    }
    if (static_cast<int>(parts.size()) != nvars) {
        throw InvalidArgument("specialization: expected " + std::to_string(nvars) + " names, got " +
                              std::to_string(parts.size()));
    }
    std::vector<Exponent> assignment;
    for (const auto& name : parts) {
        if (name == "1") {
            assignment.push_back(Exponent{});
            continue;
        }
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) {
            names.push_back(name);
            it = names.end() - 1;
        }
        assignment.push_back(Exponent::unit(static_cast<int>(it - names.begin())));
    }
    return {assignment, names};
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

// Middle dot, the product separator used by to_string.
constexpr std::string_view kDot = "\xC2\xB7";

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, const std::vector<std::string>& names)
        : text_(text), names_(names), nvars_(static_cast<int>(names.size())) {
        if (nvars_ > kMaxRank) throw InvalidArgument("parse_polynomial: too many variables");
        order_.resize(names_.size());
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::sort(order_.begin(), order_.end(),
                  [&](std::size_t a, std::size_t b) { return names_[a].size() > names_[b].size(); });
    }

    LaurentPolynomial parse() {
        auto p = sum();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InvalidArgument("parse_polynomial: " + what + " at offset " + std::to_string(pos_));
    }

    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n')) ++pos_;
    }

    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool starts_factor() {
        skip_space();
        if (pos_ >= text_.size()) return false;
        const char c = text_[pos_];
        return c == '(' || c == '*' || text_.substr(pos_, kDot.size()) == kDot || (c >= '0' && c <= '9') ||
               match_name() >= 0;
    }

    void skip_times() {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '*') {
            ++pos_;
        } else if (text_.substr(pos_, kDot.size()) == kDot) {
            pos_ += kDot.size();
        }
    }

    int match_name() const {
        for (const auto k : order_) {
            const auto& n = names_[k];
            if (!n.empty() && text_.substr(pos_, n.size()) == n) return static_cast<int>(k);
        }
        return -1;
    }

    LaurentPolynomial sum() {
        LaurentPolynomial acc(nvars_);
        bool negative = false;
        if (peek('+') || peek('-')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        for (;;) {
            auto t = product();
            if (negative) t = -t;
            acc += t;
            if (peek('+') || peek('-')) {
                negative = text_[pos_] == '-';
                ++pos_;
                continue;
            }
            return acc;
        }
    }

    LaurentPolynomial product() {
        auto acc = power();
        while (starts_factor()) {
            skip_times();
            acc = acc * power();
        }
        return acc;
    }

    LaurentPolynomial power() {
        auto base = primary();
        if (!peek('^')) return base;
        ++pos_;
        skip_space();
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        const auto n = number();
        if (n > 1'000'000) fail("exponent too large");
        const auto k = n.get_si();
        if (negative) {
            if (base.size() != 1) fail("negative power of a non-monomial");
            const auto [e, c] = base.leading_term();
            if (c != 1 && c != -1) fail("negative power of a non-unit monomial");
            base = LaurentPolynomial::monomial(nvars_, -e, c);
        }
        auto out = LaurentPolynomial::constant(nvars_, 1);
        for (long i = 0; i < k; ++i) out *= base;
        return out;
    }

    LaurentPolynomial primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        if (text_[pos_] == '(') {
            ++pos_;
            auto inner = sum();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (text_[pos_] >= '0' && text_[pos_] <= '9') return LaurentPolynomial::constant(nvars_, number());
        const int k = match_name();
        if (k < 0) fail("unknown symbol");
        pos_ += names_[static_cast<std::size_t>(k)].size();
        return LaurentPolynomial::variable(nvars_, k);
    }

    Integer number() {
        const auto start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        if (start == pos_) fail("expected a number");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    const std::vector<std::string>& names_;
    int nvars_;
    std::vector<std::size_t> order_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
    return ExpressionParser(text, names).parse();
}

Integer evaluate_at_one(const LaurentPolynomial& p) {
    Integer s = 0;
    for (const auto& [e, c] : p.term_map()) s += c;
    return s;
}

}  // namespace weylchar
