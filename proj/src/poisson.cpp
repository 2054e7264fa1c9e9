#include "beambnf/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <sstream>
#include <stdexcept>

namespace beambnf {

namespace {
constexpr std::complex<double> kImagUnit{0.0, 1.0};

double factorial_small(int n) {
    double f = 1.0;
    for (int t = 2; t <= n; ++t) f *= t;
    return f;
}
}  // namespace

PairedMonomial::PairedMonomial(const std::vector<Slot>& slots) {
    for (const auto& s : slots) insert_merged(s.index, s.up, s.down);
}

void PairedMonomial::push_pair(int index, int sign_a, int sign_b) {
    const int up = (sign_a > 0 ? 1 : 0) + (sign_b > 0 ? 1 : 0);
    insert_merged(static_cast<std::uint32_t>(index), up, 2 - up);
}

void PairedMonomial::insert_merged(std::uint32_t index, int up, int down) {
    if (up == 0 && down == 0) return;
    int pos = 0;
    while (pos < n_ && slots_[static_cast<std::size_t>(pos)].index < index) ++pos;
    if (pos < n_ && slots_[static_cast<std::size_t>(pos)].index == index) {
        auto& s = slots_[static_cast<std::size_t>(pos)];
        const int nu = s.up + up, nd = s.down + down;
        if (nu < 0 || nd < 0) throw std::logic_error("PairedMonomial: negative exponent");
        if (nu == 0 && nd == 0) {
            for (int t = pos; t + 1 < n_; ++t)
                slots_[static_cast<std::size_t>(t)] = slots_[static_cast<std::size_t>(t + 1)];
            --n_;
            return;
        }
        s.up = static_cast<std::uint8_t>(nu);
        s.down = static_cast<std::uint8_t>(nd);
        return;
    }
    if (up < 0 || down < 0) throw std::logic_error("PairedMonomial: negative exponent");
    if (n_ == kMaxSlots) throw std::logic_error("PairedMonomial: slot capacity exceeded");
    for (int t = n_; t > pos; --t)
        slots_[static_cast<std::size_t>(t)] = slots_[static_cast<std::size_t>(t - 1)];
    slots_[static_cast<std::size_t>(pos)] = {index, static_cast<std::uint8_t>(up),
                                             static_cast<std::uint8_t>(down)};
    ++n_;
}

int PairedMonomial::degree() const {
    int d = 0;
    for (int t = 0; t < n_; ++t) d += slots_[static_cast<std::size_t>(t)].up + slots_[static_cast<std::size_t>(t)].down;
    return d;
}

bool PairedMonomial::is_paired() const {
    for (int t = 0; t < n_; ++t)
        if ((slots_[static_cast<std::size_t>(t)].up + slots_[static_cast<std::size_t>(t)].down) % 2 != 0) return false;
    return true;
}

bool PairedMonomial::is_action() const {
    for (int t = 0; t < n_; ++t)
        if (slots_[static_cast<std::size_t>(t)].up != slots_[static_cast<std::size_t>(t)].down) return false;
    return true;
}

double PairedMonomial::small_divisor(const std::vector<double>& omega) const {
    double d = 0.0;
    for (int t = 0; t < n_; ++t) {
        const auto& s = slots_[static_cast<std::size_t>(t)];
        if (s.index > omega.size())
            throw std::out_of_range("small_divisor: index beyond frequency table");
        d += (static_cast<int>(s.up) - static_cast<int>(s.down)) * omega[s.index - 1];
    }
    return d;
}

long long PairedMonomial::net_index_square() const {
    long long acc = 0;
    for (int t = 0; t < n_; ++t) {
        const auto& s = slots_[static_cast<std::size_t>(t)];
        acc += static_cast<long long>(static_cast<int>(s.up) - static_cast<int>(s.down)) *
               static_cast<long long>(s.index) * static_cast<long long>(s.index);
    }
    return acc;
}

bool PairedMonomial::net_signs_zero() const {
    for (int t = 0; t < n_; ++t)
        if (slots_[static_cast<std::size_t>(t)].up != slots_[static_cast<std::size_t>(t)].down) return false;
    return true;
}

PairedMonomial PairedMonomial::conjugated() const {
    PairedMonomial out = *this;
    for (int t = 0; t < out.n_; ++t)
        std::swap(out.slots_[static_cast<std::size_t>(t)].up, out.slots_[static_cast<std::size_t>(t)].down);
    return out;
}

bool operator==(const PairedMonomial& a, const PairedMonomial& b) {
    if (a.n_ != b.n_) return false;
    for (int t = 0; t < a.n_; ++t)
        if (!(a.slots_[static_cast<std::size_t>(t)] == b.slots_[static_cast<std::size_t>(t)])) return false;
    return true;
}

bool PairedMonomial::operator<(const PairedMonomial& other) const {
    const int da = degree(), db = other.degree();
    if (da != db) return da < db;
    if (n_ != other.n_) return n_ < other.n_;
    for (int t = 0; t < n_; ++t) {
        const auto& a = slots_[static_cast<std::size_t>(t)];
        const auto& b = other.slots_[static_cast<std::size_t>(t)];
        if (a.index != b.index) return a.index < b.index;
        if (a.up != b.up) return a.up < b.up;
        if (a.down != b.down) return a.down < b.down;
    }
    return false;
}

std::size_t PairedMonomial::Hash::operator()(const PairedMonomial& mono) const {
    // FNV-1a over the packed slots
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    for (int t = 0; t < mono.n_slots(); ++t) {
        const auto& s = mono.slot(t);
        mix(s.index);
        mix((static_cast<std::size_t>(s.up) << 8) | s.down);
    }
    return h;
}

void PairedPolynomial::add(const PairedMonomial& mono, Coeff c) {
    if (c == Coeff{}) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second == Coeff{}) terms_.erase(it);
    }
}

PairedPolynomial::Coeff PairedPolynomial::coefficient(const PairedMonomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Coeff{} : it->second;
}

std::vector<std::pair<PairedMonomial, PairedPolynomial::Coeff>> PairedPolynomial::sorted_terms()
    const {
    std::vector<std::pair<PairedMonomial, Coeff>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

double PairedPolynomial::max_abs_coefficient() const {
    double best = 0.0;
    for (const auto& [mono, c] : terms_) best = std::max(best, std::abs(c));
    return best;
}

int PairedPolynomial::max_index() const {
    int best = 0;
    for (const auto& [mono, c] : terms_) best = std::max(best, mono.max_index());
    return best;
}

int PairedPolynomial::min_degree() const {
    int best = 0;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        const int d = mono.degree();
        best = first ? d : std::min(best, d);
        first = false;
    }
    return best;
}

int PairedPolynomial::max_degree() const {
    int best = 0;
    for (const auto& [mono, c] : terms_) best = std::max(best, mono.degree());
    return best;
}

bool PairedPolynomial::is_paired() const {
    for (const auto& [mono, c] : terms_)
        if (!mono.is_paired()) return false;
    return true;
}

bool PairedPolynomial::is_real_valued(double tol) const {
    const double scale = std::max(1.0, max_abs_coefficient());
    for (const auto& [mono, c] : terms_) {
        const Coeff other = coefficient(mono.conjugated());
        if (std::abs(c - std::conj(other)) > tol * scale) return false;
    }
    return true;
}

PairedPolynomial PairedPolynomial::operator*(double s) const {
    PairedPolynomial out;
    if (s == 0.0) return out;
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, c * s);
    return out;
}

PairedPolynomial PairedPolynomial::operator+(const PairedPolynomial& other) const {
    PairedPolynomial out = *this;
    for (const auto& [mono, c] : other.sorted_terms()) out.add(mono, c);
    return out;
}

PairedPolynomial PairedPolynomial::operator-(const PairedPolynomial& other) const {
    PairedPolynomial out = *this;
    for (const auto& [mono, c] : other.sorted_terms()) out.add(mono, -c);
    return out;
}

PairedPolynomial bracket(const PairedPolynomial& F, const PairedPolynomial& G) {
    PairedPolynomial out;
    // sorted inputs make the floating-point accumulation order reproducible
    const auto tf = F.sorted_terms();
    const auto tg = G.sorted_terms();
    for (const auto& [mf, cf] : tf) {
        for (const auto& [mg, cg] : tg) {
            // common indices contribute i (up_F down_G - down_F up_G) per index
            for (int a = 0; a < mf.n_slots(); ++a) {
                const auto& sf = mf.slot(a);
                for (int b = 0; b < mg.n_slots(); ++b) {
                    const auto& sg = mg.slot(b);
                    if (sf.index != sg.index) continue;
                    const long long factor =
                        static_cast<long long>(sf.up) * sg.down -
                        static_cast<long long>(sf.down) * sg.up;
                    if (factor == 0) continue;
                    PairedMonomial merged = mf;
                    for (int t = 0; t < mg.n_slots(); ++t) {
                        const auto& s = mg.slot(t);
                        merged.insert_merged(s.index, s.up, s.down);
                    }
                    merged.insert_merged(sf.index, -1, -1);
                    out.add(merged, kImagUnit * cf * cg * static_cast<double>(factor));
                }
            }
        }
    }
    return out;
}

PairedPolynomial multiply(const PairedPolynomial& F, const PairedPolynomial& G) {
    PairedPolynomial out;
    const auto tf = F.sorted_terms();
    const auto tg = G.sorted_terms();
    for (const auto& [mf, cf] : tf) {
        for (const auto& [mg, cg] : tg) {
            PairedMonomial merged = mf;
            for (int t = 0; t < mg.n_slots(); ++t) {
                const auto& s = mg.slot(t);
                merged.insert_merged(s.index, s.up, s.down);
            }
            out.add(merged, cf * cg);
        }
    }
    return out;
}

std::complex<double> evaluate(const PairedPolynomial& P, const ModeState& z) {
    std::complex<double> acc{};
    for (const auto& [mono, c] : P.sorted_terms()) {
        std::complex<double> v = c;
        for (int t = 0; t < mono.n_slots(); ++t) {
            const auto& s = mono.slot(t);
            if (s.index > z.size()) throw std::out_of_range("evaluate: index beyond truncation");
            const std::complex<double> zj = z[s.index - 1];
            for (int e = 0; e < s.up; ++e) v *= zj;
            const std::complex<double> cz = std::conj(zj);
            for (int e = 0; e < s.down; ++e) v *= cz;
        }
        acc += v;
    }
    return acc;
}

ModeState hamiltonian_field(const PairedPolynomial& P, const ModeState& z) {
    ModeState out(z.size(), {0.0, 0.0});
    for (const auto& [mono, c] : P.sorted_terms()) {
        for (int t = 0; t < mono.n_slots(); ++t) {
            const auto& sh = mono.slot(t);
            if (sh.down == 0) continue;
            if (sh.index > z.size())
                throw std::out_of_range("hamiltonian_field: index beyond truncation");
            std::complex<double> v = kImagUnit * c * static_cast<double>(sh.down);
            for (int u = 0; u < mono.n_slots(); ++u) {
                const auto& s = mono.slot(u);
                const std::complex<double> zj = z[s.index - 1];
                const int down = (u == t) ? s.down - 1 : s.down;
                for (int e = 0; e < s.up; ++e) v *= zj;
                const std::complex<double> cz = std::conj(zj);
                for (int e = 0; e < down; ++e) v *= cz;
            }
            out[sh.index - 1] += v;
        }
    }
    return out;
}

CompiledField::CompiledField(const PairedPolynomial& P, int n_trunc) : n_(n_trunc) {
    for (const auto& [mono, c] : P.sorted_terms()) {
        if (mono.max_index() > n_trunc)
            throw std::out_of_range("CompiledField: index beyond truncation");
        for (int t = 0; t < mono.n_slots(); ++t) {
            const auto& sh = mono.slot(t);
            if (sh.down == 0) continue;
            Term term;
            term.component = sh.index;
            term.coeff = kImagUnit * c * static_cast<double>(sh.down);
            term.n_slots = static_cast<std::uint8_t>(mono.n_slots());
            for (int u = 0; u < mono.n_slots(); ++u) {
                auto s = mono.slot(u);
                if (u == t) s.down = static_cast<std::uint8_t>(s.down - 1);
                term.slots[static_cast<std::size_t>(u)] = s;
            }
            terms_.push_back(term);
        }
    }
}

void CompiledField::apply(const ModeState& z, ModeState& out) const {
    out.assign(z.size(), {0.0, 0.0});
    for (const auto& term : terms_) {
        std::complex<double> v = term.coeff;
        for (int u = 0; u < term.n_slots; ++u) {
            const auto& s = term.slots[static_cast<std::size_t>(u)];
            if (s.up == 0 && s.down == 0) continue;
            const std::complex<double> zj = z[s.index - 1];
            for (int e = 0; e < s.up; ++e) v *= zj;
            const std::complex<double> cz = std::conj(zj);
            for (int e = 0; e < s.down; ++e) v *= cz;
        }
        out[term.component - 1] += v;
    }
}

namespace {

// Exponent vector of a xi-monomial (xi_j = |z_j|^2), sparse and sorted.
using XiKey = std::vector<std::pair<std::uint32_t, int>>;

}  // namespace

double norm_upper_bound(const PairedPolynomial& P, double r, const WeightSequence& w) {
    if (!(r > 0.0)) throw std::invalid_argument("norm_upper_bound: require r > 0");
    if (P.empty()) return 0.0;
    if (P.max_index() > w.size())
        throw std::out_of_range("norm_upper_bound: index beyond weight sequence");
    if (!P.is_paired()) throw std::invalid_argument("norm_upper_bound: polynomial is not paired");

    const auto terms = P.sorted_terms();

    // --- grouped simplex bound ---------------------------------------------
    // On the ball substitute eta_j = w_j^2 |z_j|^2 (so sum eta <= r^2).  The
    // majorant field factors as |X^h| <= x_h g_h(eta) with g_h a polynomial
    // with nonnegative coefficients; each total-degree class of g_h is summed
    // via the multinomial identity, which keeps the bound free of the mode
    // count for quadratic-form structures like the stretching term.
    std::map<std::uint32_t, std::map<XiKey, double>> g;  // h -> eta-monomial -> coeff
    for (const auto& [mono, c] : terms) {
        const double ac = std::abs(c);
        for (int t = 0; t < mono.n_slots(); ++t) {
            const auto& sh = mono.slot(t);
            if (sh.down == 0) continue;
            XiKey key;
            double wdiv = 1.0;
            for (int u = 0; u < mono.n_slots(); ++u) {
                const auto& s = mono.slot(u);
                int k = (s.up + s.down) / 2;
                if (u == t) k -= 1;
                if (k == 0) continue;
                key.emplace_back(s.index, k);
                wdiv *= std::pow(w.at(static_cast<int>(s.index)), 2.0 * k);
            }
            g[sh.index][key] += ac * static_cast<double>(sh.down) / wdiv;
        }
    }
    double grouped = 0.0;
    for (const auto& [h, poly] : g) {
        std::map<int, double> class_max;  // total degree -> max a_k prod k! / D!
        for (const auto& [key, a] : poly) {
            int D = 0;
            double kfac = 1.0;
            for (const auto& [idx, k] : key) {
                D += k;
                kfac *= factorial_small(k);
            }
            const double weighted = a * kfac / factorial_small(D);
            auto [it, inserted] = class_max.try_emplace(D, weighted);
            if (!inserted) it->second = std::max(it->second, weighted);
        }
        double Gh = 0.0;
        for (const auto& [D, cmax] : class_max) Gh += cmax * std::pow(r * r, D);
        grouped = std::max(grouped, Gh);
    }

    // --- per-monomial corner bound ------------------------------------------
    // |z_j| <= r / w_j per coordinate; component h bounded by
    // sum_M |c| down_h r^{d-1} w_h / prod(slot weights), then the weighted l2
    // combination over components.
    std::map<std::uint32_t, double> b;
    for (const auto& [mono, c] : terms) {
        const double ac = std::abs(c);
        const int d = mono.degree();
        double wprod = 1.0;
        for (int u = 0; u < mono.n_slots(); ++u) {
            const auto& s = mono.slot(u);
            wprod *= std::pow(w.at(static_cast<int>(s.index)), static_cast<double>(s.up + s.down));
        }
        for (int t = 0; t < mono.n_slots(); ++t) {
            const auto& sh = mono.slot(t);
            if (sh.down == 0) continue;
            const double wh = w.at(static_cast<int>(sh.index));
            b[sh.index] += ac * static_cast<double>(sh.down) * std::pow(r, d - 1) * wh / wprod;
        }
    }
    double corner_sq = 0.0;
    for (const auto& [h, bh] : b) {
        const double wh = w.at(static_cast<int>(h));
        corner_sq += wh * wh * bh * bh;
    }
    const double corner = std::sqrt(corner_sq) / r;

    return std::min(grouped, corner);
}

PairedPolynomial project_integrable4(const PairedPolynomial& P) {
    PairedPolynomial out;
    for (const auto& [mono, c] : P.sorted_terms()) {
        if (mono.degree() != 4)
            throw std::invalid_argument("project_integrable4: polynomial not homogeneous of degree 4");
        if (mono.is_action()) out.add(mono, c);
    }
    return out;
}

PairedPolynomial project_integrable6(const PairedPolynomial& P, double m) {
    PairedPolynomial out;
    for (const auto& [mono, c] : P.sorted_terms()) {
        if (mono.degree() != 6)
            throw std::invalid_argument("project_integrable6: polynomial not homogeneous of degree 6");
        const bool resonant =
            mono.net_signs_zero() || (m == 0.0 && mono.net_index_square() == 0);
        if (resonant) out.add(mono, c);
    }
    return out;
}

PairedPolynomial truncate_degree(const PairedPolynomial& P, int d_max) {
    PairedPolynomial out;
    for (const auto& [mono, c] : P.sorted_terms())
        if (mono.degree() <= d_max) out.add(mono, c);
    return out;
}

std::string dump(const PairedPolynomial& P) {
    std::ostringstream os;
    os.precision(17);
    for (const auto& [mono, c] : P.sorted_terms()) {
        if (c.imag() == 0.0)
            os << c.real();
        else if (c.real() == 0.0)
            os << c.imag() << 'i';
        else
            os << '(' << c.real() << (c.imag() >= 0 ? "+" : "") << c.imag() << "i)";
        for (int t = 0; t < mono.n_slots(); ++t) {
            const auto& s = mono.slot(t);
            // canonical pair decomposition of (up, down)
            const int n_pm = s.up % 2;
            const int n_pp = (s.up - n_pm) / 2;
            const int n_mm = (s.down - n_pm) / 2;
            for (int e = 0; e < n_pp; ++e) os << "  " << s.index << ":++";
            for (int e = 0; e < n_pm; ++e) os << "  " << s.index << ":+-";
            for (int e = 0; e < n_mm; ++e) os << "  " << s.index << ":--";
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace beambnf
