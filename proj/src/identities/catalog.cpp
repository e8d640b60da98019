#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

#include "fracsum/errors.hpp"
#include "fracsum/identities.hpp"
#include "fracsum/special.hpp"

namespace fracsum::identities {
namespace {

using special::constants::euler_gamma;

Complex get(const Parameters& p, const std::string& name) {
    for (const Parameter& q : p) {
        if (q.name == name) {
            return q.value;
        }
    }
    throw ContractError("missing parameter '" + name + "'");
}

int get_int(const Parameters& p, const std::string& name) {
    return static_cast<int>(std::lround(get(p, name).real()));
}

Sides from_engine(const FracSumResult& r, Complex rhs) {
    Sides s;
    s.lhs = r.value;
    s.rhs = rhs;
    s.n_used = r.n_used;
    s.converged = r.converged;
    s.notes = "method=" + r.method;
    if (!r.converged) {
        s.notes += "; engine did not reach its tolerance";
    }
    return s;
}

Sides closed(Complex lhs, Complex rhs) {
    Sides s;
    s.lhs = lhs;
    s.rhs = rhs;
    return s;
}

std::string no_reject(const Parameters&) { return {}; }

// Rejects x at a negative integer, the poles of the closed forms.
std::string reject_x_pole(const Parameters& p) {
    const Complex x = get(p, "x");
    if (is_integer(x) && x.real() < -0.5) {
        return "x is a negative integer";
    }
    return {};
}

std::vector<Parameters> cartesian(const std::string& n1, std::vector<Complex> v1,
                                  const std::string& n2, std::vector<Complex> v2) {
    std::vector<Parameters> out;
    for (Complex a : v1) {
        for (Complex b : v2) {
            out.push_back({{n1, a}, {n2, b}});
        }
    }
    return out;
}

std::vector<Parameters> single(const std::string& name, std::vector<Complex> values) {
    std::vector<Parameters> out;
    for (Complex v : values) {
        out.push_back({{name, v}});
    }
    return out;
}

// A random s with |s| <= radius and |s - 1| > 0.1.
Complex random_s(GridRng& rng, double radius) {
    for (;;) {
        const Complex s = rng.complex_in_box(-radius, radius, -radius, radius);
        if (std::abs(s) <= radius && std::abs(s - 1.0) > 0.1) {
            return s;
        }
    }
}

SummedFunction summed(const std::string& name) {
    if (name == "v") {
        return {power_summand(1.0), [](Complex x) { return x * (x + 1.0) / 2.0; }};
    }
    if (name == "v^2") {
        return {power_summand(2.0), [](Complex x) { return x * (x + 1.0) * (2.0 * x + 1.0) / 6.0; }};
    }
    if (name == "1/v") {
        return {reciprocal_summand(), [](Complex x) { return up(x, -1.0); }};
    }
    if (name == "ln v") {
        return {log_summand(), [](Complex x) { return special::ln_gamma(x + 1.0); }};
    }
    if (name == "0.4^v") {
        return {geometric_summand(0.4), [](Complex x) { return geometric_closed(0.4, x) - 1.0; }};
    }
    throw ContractError("unknown lemma summand " + name);
}

// Lemma summands by index, with the working degree of the combined summand.
struct LemmaEntry {
    std::string f;
    std::string g;
    Degree sigma;
};

const std::vector<LemmaEntry> kProductEntries = {
    {"v", "v^2", Degree(4)},
    {"1/v", "1/v", Degree(2)},
    {"ln v", "v", Degree(4)},
    {"v", "v", Degree(3)},
    {"v^2", "1/v", Degree(4)},
};

const std::vector<LemmaEntry> kSquareEntries = {
    {"v", "v", Degree(3)},
    {"0.4^v", "0.4^v", Degree(2)},
    {"1/v", "1/v", Degree(2)},
};

// Summands for the mirror-law and polynomial cases, by index.
Summand mirror_summand(int k) {
    switch (k) {
        case 0:
            return geometric_summand(2.0);
        case 1:
            return polynomial_summand(Polynomial({0.0, -3.0, 1.0}));
        case 2:
            return geometric_summand(1.1);
        default:
            return polynomial_summand(Polynomial({1.0, 0.0, 0.0, Complex(0.5, 1.0)}));
    }
}

std::vector<IdentityCase> build_catalog() {
    std::vector<IdentityCase> c;
    const std::vector<std::string> core = {"core"};
    const std::vector<std::string> core_zeta = {"core", "zeta"};

    c.push_back({
        "euler.minus-half-harmonic",
        "engine sum of 1/v from 1 to -1/2 equals -2 ln 2",
        core,
        1e-8,
        false,
        [](std::uint64_t) { return std::vector<Parameters>{{{"x", -0.5}}}; },
        no_reject,
        [](const Parameters& p, const EngineConfig& cfg) {
            return from_engine(frac_sum_right(reciprocal_summand(), 1.0, get(p, "x"), cfg),
                               -2.0 * std::numbers::ln2);
        },
    });

    c.push_back({
        "harmonic.digamma",
        "engine sum of 1/v from 1 to x equals gamma + psi(x+1)",
        core,
        1e-8,
        false,
        [](std::uint64_t) {
            return single("x", {0.5, 2.5, Complex(1.0, 1.0), -0.3, Complex(-0.5, 2.0)});
        },
        reject_x_pole,
        [](const Parameters& p, const EngineConfig& cfg) {
            const Complex x = get(p, "x");
            return from_engine(frac_sum_right(reciprocal_summand(), 1.0, x, cfg),
                               euler_gamma + special::digamma(x + 1.0));
        },
    });

    c.push_back({
        "factorial.product",
        "engine product of v from 1 to x equals Gamma(x+1)",
        {"core", "products"},
        1e-6,
        false,
        [](std::uint64_t) { return single("x", {0.5, 2.5, -1.0 / 3.0, Complex(1.0, 1.0)}); },
        reject_x_pole,
        [](const Parameters& p, const EngineConfig& cfg) {
            const Complex x = get(p, "x");
            return from_engine(frac_product(log_summand(), 1.0, x, cfg), special::gamma(x + 1.0));
        },
    });

    c.push_back({
        "geometric.right",
        "right sum of q^v from 0 to x equals (q^{x+1}-1)/(q-1) for |q| < 1",
        core,
        1e-9,
        false,
        [](std::uint64_t) {
            return cartesian("q", {0.3, 0.9, Complex(0.5, 0.3)}, "x",
                             {0.5, 2.5, Complex(1.0, 0.5), -0.5});
        },
        [](const Parameters& p) {
            return std::abs(get(p, "q")) < 1.0 ? std::string() : std::string("|q| must be < 1");
        },
        [](const Parameters& p, const EngineConfig& cfg) {
            const Complex q = get(p, "q");
            const Complex x = get(p, "x");
            return from_engine(frac_sum_right(geometric_summand(q), 0.0, x, cfg),
                               geometric_closed(q, x));
        },
    });

    c.push_back({
        "geometric.left",
        "left sum of q^v from 0 to x equals (q^{x+1}-1)/(q-1) for |q| > 1",
        {"core", "left"},
        1e-9,
        false,
        [](std::uint64_t) {
            return cartesian("q", {2.0, 1.1}, "x", {0.5, 2.5, Complex(-0.5, 0.3), -0.5});
        },
        [](const Parameters& p) {
            return std::abs(get(p, "q")) > 1.0 ? std::string() : std::string("|q| must be > 1");
        },
        [](const Parameters& p, const EngineConfig& cfg) {
            const Complex q = get(p, "q");
            const Complex x = get(p, "x");
            return from_engine(frac_sum_left(geometric_summand(q), 0.0, x, cfg),
                               geometric_closed(q, x));
        },
    });

    auto binomial_grid = [](std::vector<Complex> xs) {
        return [xs](std::uint64_t) {
            return cartesian("c", {0.5, 2.5, Complex(1.0, 1.0)}, "x", xs);
        };
    };
    auto binomial_reject = [](bool left) {
        return [left](const Parameters& p) {
            const Complex cc = get(p, "c");
            const double ax = std::abs(get(p, "x"));
            if (is_integer(cc) && cc.real() < -0.5) {
                return std::string("c is a negative integer");
            }
            if (std::abs(ax - 1.0) < 1e-12) {
                return std::string("|x| = 1 is not covered");
            }
            if (left != (ax > 1.0)) {
                return std::string(left ? "left sums need |x| > 1" : "right sums need |x| < 1");
            }
            return std::string();
        };
    };

    c.push_back({
        "binomial.right",
        "right sum of C(c,v) x^v from 0 to c equals (1+x)^c for |x| < 1",
        core,
        1e-6,
        false,
        binomial_grid({0.3, 0.8}),
        binomial_reject(false),
        [](const Parameters& p, const EngineConfig& cfg) {
            const Complex cc = get(p, "c");
            const Complex x = get(p, "x");
            return from_engine(frac_sum_right(binomial_summand(cc, x), 0.0, cc, cfg),
                               binomial_closed(cc, x));
        },
    });

    c.push_back({
        "binomial.left",
        "left sum of C(c,v) x^v from 0 to c equals (1+x)^c for |x| > 1",
        {"core", "left"},
        1e-6,
        false,
        binomial_grid({2.0, 5.0}),
        binomial_reject(true),
        [](const Parameters& p, const EngineConfig& cfg) {
            const Complex cc = get(p, "c");
            const Complex x = get(p, "x");
            return from_engine(frac_sum_left(binomial_summand(cc, x), 0.0, cc, cfg),
                               binomial_closed(cc, x));
        },
    });

    c.push_back({
        "zeta.extended-riemann-hurwitz",
        "engine sum of v^a from 1 to x equals zeta(-a) - zeta(-a, x+1)",
        core_zeta,
        1e-6,
        false,
        [](std::uint64_t) {
            return cartesian("a", {0.5, -0.5, 2.0, Complex(0.3, 0.2)}, "x",
                             {0.5, -0.5, Complex(1.0, 1.0)});
        },
        [](const Parameters& p) {
            if (std::abs(get(p, "a") + 1.0) < 1e-12) {
                return std::string("a = -1 belongs to the harmonic case");
            }
            return reject_x_pole(p);
        },
        [](const Parameters& p, const EngineConfig& cfg) {
            const Complex a = get(p, "a");
            const Complex x = get(p, "x");
            return from_engine(frac_sum_right(power_summand(a), 1.0, x, cfg), up(x, a));
        },
    });

    c.push_back({
        "zeta.minus-half-even",
        "the power sums of v^{2k} up to -1/2 vanish",
        core_zeta,
        1e-9,
        false,
        [](std::uint64_t) { return single("k", {1.0, 2.0, 3.0, 4.0, 5.0}); },
        no_reject,
        [](const Parameters& p, const EngineConfig&) {
            return closed(up(-0.5, 2.0 * get(p, "k")), 0.0);
        },
    });

    c.push_back({
        "zeta.minus-half-power",
        "up(-1/2, a) equals (2 - 2^{-a}) zeta(-a)",
        core_zeta,
        1e-9,
        false,
        [](std::uint64_t seed) {
            std::vector<Complex> as = {0.0, 1.0, -2.0, 0.5, -0.5, 3.0, Complex(0.3, 0.2),
                                       Complex(-2.5, 1.0)};
            GridRng rng(seed, "zeta.minus-half-power");
            for (int i = 0; i < 12; ++i) {
                const Complex a = rng.complex_in_box(-4.0, 4.0, -3.0, 3.0);
                if (std::abs(a + 1.0) > 0.1) {
                    as.push_back(a);
                }
            }
            return single("a", as);
        },
        [](const Parameters& p) {
            return std::abs(get(p, "a") + 1.0) < 1e-12 ? std::string("a = -1") : std::string();
        },
        [](const Parameters& p, const EngineConfig&) {
            const Complex a = get(p, "a");
            return closed(up(-0.5, a), minus_half_power(a));
        },
    });

    c.push_back({
        "hurwitz.recurrence",
        "zeta(s, x+1) equals zeta(s, x) - x^{-s}",
        core_zeta,
        1e-11,
        false,
        [](std::uint64_t seed) {
            GridRng rng(seed, "hurwitz.recurrence");
            std::vector<Parameters> out;
            for (int i = 0; i < 200; ++i) {
                const Complex s = random_s(rng, 6.0);
                const Complex x = rng.complex_in_box(0.5, 10.0, -3.0, 3.0);
                out.push_back({{"s", s}, {"x", x}});
            }
            return out;
        },
        [](const Parameters& p) {
            return std::abs(get(p, "s") - 1.0) < 1e-12 ? std::string("s = 1") : std::string();
        },
        [](const Parameters& p, const EngineConfig&) {
            const Complex s = get(p, "s");
            const Complex x = get(p, "x");
            return closed(special::hurwitz_zeta(s, x + 1.0),
                          special::hurwitz_zeta(s, x) - cpow(x, -s));
        },
    });

    c.push_back({
        "hurwitz.x-derivative",
        "d/dx zeta(s-1, x) equals -(s-1) zeta(s, x)",
        core_zeta,
        1e-6,
        false,
        [](std::uint64_t seed) {
            GridRng rng(seed, "hurwitz.x-derivative");
            std::vector<Parameters> out;
            for (int i = 0; i < 50; ++i) {
                const Complex s = random_s(rng, 6.0);
                const Complex x = rng.complex_in_box(0.5, 10.0, -3.0, 3.0);
                out.push_back({{"s", s}, {"x", x}});
            }
            return out;
        },
        [](const Parameters& p) {
            const Complex s = get(p, "s");
            return std::abs(s - 1.0) < 1e-12 || std::abs(s - 2.0) < 1e-12 ? std::string("pole")
                                                                          : std::string();
        },
        [](const Parameters& p, const EngineConfig&) {
            const Complex s = get(p, "s");
            const Complex x = get(p, "x");
            constexpr double h = 1e-3;
            auto central = [&](double step) {
                return (special::hurwitz_zeta(s - 1.0, x + step) -
                        special::hurwitz_zeta(s - 1.0, x - step)) /
                       (2.0 * step);
            };
            return closed((4.0 * central(h / 2.0) - central(h)) / 3.0,
                          -(s - 1.0) * special::hurwitz_zeta(s, x));
        },
    });

    c.push_back({
        "zeta.derivatives",
        "engine sum of v^a ln v from 1 to x equals -(zeta'(-a) - zeta'(-a, x+1))",
        core_zeta,
        1e-5,
        false,
        [](std::uint64_t) {
            auto g = cartesian("a", {1.0, 2.0}, "x", {-0.5});
            auto extra = cartesian("a", {0.5, Complex(0.3, 0.2)}, "x", {0.5, -0.5});
            g.insert(g.end(), extra.begin(), extra.end());
            return g;
        },
        reject_x_pole,
        [](const Parameters& p, const EngineConfig& cfg) {
            const Complex a = get(p, "a");
            const Complex x = get(p, "x");
            return from_engine(frac_sum_right(power_log_summand(a, 1), 1.0, x, cfg),
                               power_log_sum(a, 1, x));
        },
    });

    c.push_back({
        "zeta.sum-v-log-v",
        "the sum of v^a ln v up to -1/2 equals 2^{-a} zeta(-a) ln 2 - (2 - 2^{-a}) zeta'(-a)",
        core_zeta,
        1e-9,
        false,
        [](std::uint64_t) { return single("a", {1.0, 2.0, 0.5, -0.5, 3.0, Complex(0.3, 0.2)}); },
        no_reject,
        [](const Parameters& p, const EngineConfig&) {
            const Complex a = get(p, "a");
            return closed(power_log_sum(a, 1, -0.5), sum_v_log_v_minus_half(a));
        },
    });

    c.push_back({
        "double.sums",
        "engine sum of up(v,a) v^b + up(v,b) v^a equals up(x,a) up(x,b) + up(x,a+b)",
        core_zeta,
        1e-5,
        false,
        [](std::uint64_t) {
            return std::vector<Parameters>{
                {{"a", 0.0}, {"b", 0.0}, {"x", 3.0}},
                {{"a", 1.0}, {"b", 0.0}, {"x", -0.5}},
                {{"a", 1.0}, {"b", 1.0}, {"x", 0.5}},
                {{"a", 0.5}, {"b", -0.3}, {"x", -0.5}},
                {{"a", 1.0}, {"b", 2.0}, {"x", Complex(0.3, 0.4)}},
            };
        },
        [](const Parameters& p) {
            const Complex a = get(p, "a");
            const Complex b = get(p, "b");
            for (Complex e : {a, b, a + b}) {
                if (std::abs(e + 1.0) < 1e-12) {
                    return std::string("a, b and a+b must differ from -1");
                }
            }
            return reject_x_pole(p);
        },
        [](const Parameters& p, const EngineConfig& cfg) {
            return double_sum_identity(get(p, "a"), get(p, "b"), get(p, "x"), cfg);
        },
    });

    c.push_back({
        "double.power-sum",
        "engine sum of up(v,a) from 1 to x equals up(x,a)(x+1) - up(x,a+1)",
        core_zeta,
        1e-5,
        false,
        [](std::uint64_t) {
            return std::vector<Parameters>{
                {{"a", 0.0}, {"x", 4.0}},   {{"a", 1.0}, {"x", 3.0}},
                {{"a", 2.0}, {"x", -0.5}},  {{"a", 0.5}, {"x", 1.5}},
                {{"a", -0.5}, {"x", 0.5}},  {{"a", Complex(0.3, 0.2)}, {"x", -0.5}},
            };
        },
        [](const Parameters& p) {
            const Complex a = get(p, "a");
            if (std::abs(a + 1.0) < 1e-12 || std::abs(a + 2.0) < 1e-12) {
                return std::string("a and a+1 must differ from -1");
            }
            return reject_x_pole(p);
        },
        [](const Parameters& p, const EngineConfig& cfg) {
            const Complex a = get(p, "a");
            const Complex x = get(p, "x");
            return from_engine(frac_sum_right(up_summand(a), 1.0, x, cfg), double_power_sum(a, x));
        },
    });

    c.push_back({
        "iterated.stoll-integer",
        "the iterated power sum formula against nested classical sums",
        core_zeta,
        1e-10,
        false,
        [](std::uint64_t) {
            std::vector<Parameters> out;
            for (Complex a : {Complex(0.0), Complex(1.0), Complex(0.5), Complex(-0.5),
                              Complex(0.3, 0.2)}) {
                for (int fold = 1; fold <= 3; ++fold) {
                    for (int x = 0; x <= 6; ++x) {
                        out.push_back({{"fold", static_cast<double>(fold)}, {"a", a},
                                       {"x", static_cast<double>(x)}});
                    }
                }
            }
            return out;
        },
        no_reject,
        [](const Parameters& p, const EngineConfig&) {
            const int fold = get_int(p, "fold");
            const Complex a = get(p, "a");
            const long x = get_int(p, "x");
            return closed(iterated_power_sum(fold, a, static_cast<double>(x)),
                          nested_integer_sum(fold, a, x));
        },
    });

    c.push_back({
        "iterated.stoll-expanded",
        "the iterated power sum formula against its expanded forms at fractional x",
        core_zeta,
        1e-8,
        false,
        [](std::uint64_t) {
            std::vector<Parameters> out;
            for (Complex a : {Complex(0.5), Complex(2.0), Complex(0.3, 0.2)}) {
                for (int fold = 1; fold <= 3; ++fold) {
                    for (Complex x : {Complex(0.5), Complex(-0.5), Complex(2.3, 0.7)}) {
                        out.push_back({{"fold", static_cast<double>(fold)}, {"a", a}, {"x", x}});
                    }
                }
            }
            return out;
        },
        reject_x_pole,
        [](const Parameters& p, const EngineConfig&) {
            const int fold = get_int(p, "fold");
            const Complex a = get(p, "a");
            const Complex x = get(p, "x");
            return closed(iterated_power_sum(fold, a, x), iterated_power_sum_expanded(fold, a, x));
        },
    });

    c.push_back({
        "products.product-lemma",
        "(sum f)(sum g) equals the sum of f g + f G(v-1) + g F(v-1)",
        {"core", "products"},
        1e-6,
        false,
        [](std::uint64_t) {
            return std::vector<Parameters>{
                {{"pair", 0.0}, {"x", -0.5}}, {{"pair", 1.0}, {"x", 0.5}},
                {{"pair", 2.0}, {"x", -0.5}}, {{"pair", 3.0}, {"x", 4.0}},
                {{"pair", 4.0}, {"x", 3.0}},  {{"pair", 0.0}, {"x", Complex(0.5, 0.5)}},
            };
        },
        [](const Parameters& p) {
            const int k = get_int(p, "pair");
            if (k < 0 || k >= static_cast<int>(kProductEntries.size())) {
                return std::string("unknown pair index");
            }
            return reject_x_pole(p);
        },
        [](const Parameters& p, const EngineConfig& cfg) {
            const LemmaEntry& e = kProductEntries[static_cast<std::size_t>(get_int(p, "pair"))];
            Sides s = product_of_sums(summed(e.f), summed(e.g), get(p, "x"), e.sigma, cfg);
            s.notes = "f=" + e.f + ", g=" + e.g + "; " + s.notes;
            return s;
        },
    });

    c.push_back({
        "products.square-lemma",
        "(sum f)^2 equals the sum of f^2 + 2 f F(v-1)",
        {"core", "products"},
        1e-6,
        false,
        [](std::uint64_t) {
            return std::vector<Parameters>{
                {{"f", 0.0}, {"x", 5.0}},
                {{"f", 0.0}, {"x", -0.5}},
                {{"f", 1.0}, {"x", 0.5}},
                {{"f", 2.0}, {"x", 1.5}},
            };
        },
        [](const Parameters& p) {
            const int k = get_int(p, "f");
            if (k < 0 || k >= static_cast<int>(kSquareEntries.size())) {
                return std::string("unknown summand index");
            }
            return reject_x_pole(p);
        },
        [](const Parameters& p, const EngineConfig& cfg) {
            const LemmaEntry& e = kSquareEntries[static_cast<std::size_t>(get_int(p, "f"))];
            Sides s = square_of_sum(summed(e.f), get(p, "x"), e.sigma, cfg);
            s.notes = "f=" + e.f + "; " + s.notes;
            return s;
        },
    });

    c.push_back({
        "borwein.dykshoorn",
        "extrapolated prod_{k=1}^{2n+1} (1 + x/k)^{k(-1)^{k+1}} against the closed form",
        {"products"},
        1e-4,
        false,
        [](std::uint64_t) { return single("x", {1.0, 0.5}); },
        reject_x_pole,
        [](const Parameters& p, const EngineConfig&) {
            const Complex x = get(p, "x");
            const Extrapolation e = borwein_limit(x, false);
            Sides s = closed(e.value, borwein_closed(x));
            s.n_used = 8192;
            s.notes = "odd-count product in x; its limit is C(x/2) e^x = " +
                      format_complex(borwein_closed(x / 2.0) * std::exp(x));
            return s;
        },
    });

    c.push_back({
        "borwein.dykshoorn-even",
        "extrapolated prod_{k=1}^{2n} (1 + 2x/k)^{k(-1)^{k+1}} against the closed form",
        {"products"},
        1e-4,
        false,
        [](std::uint64_t) { return single("x", {1.0, 0.5, Complex(0.5, 0.5)}); },
        reject_x_pole,
        [](const Parameters& p, const EngineConfig&) {
            const Complex x = get(p, "x");
            const Extrapolation e = borwein_limit(x, true);
            Sides s = closed(e.value, borwein_closed(x));
            s.n_used = 8192;
            return s;
        },
    });

    c.push_back({
        "borwein.dykshoorn-fracsum",
        "exp(-x - sum_{v=1}^{-1/2} 2v ln(1 + x/v)) against the closed form",
        {"products"},
        1e-6,
        false,
        [](std::uint64_t) { return single("x", {1.0, 0.5, Complex(0.5, 0.5)}); },
        reject_x_pole,
        [](const Parameters& p, const EngineConfig& cfg) {
            const Complex x = get(p, "x");
            return from_engine(borwein_fracsum(x, cfg), borwein_closed(x));
        },
    });

    c.push_back({
        "gamma.product-limit",
        "Richardson limit of the Gamma product over n = 25..200 against its closed form",
        {"core", "products"},
        1e-4,
        false,
        [](std::uint64_t) { return std::vector<Parameters>{{}}; },
        no_reject,
        [](const Parameters&, const EngineConfig&) {
            const Extrapolation e = gamma_product_extrapolated();
            Sides s = closed(e.value, gamma_product_rhs());
            s.n_used = 200;
            s.notes = "L(200) = " + format_double(gamma_product_limit(200).real());
            return s;
        },
    });

    c.push_back({
        "gamma.product-rhs-forms",
        "the zeta'(-1) and Glaisher forms of the Gamma product agree",
        {"core", "products"},
        1e-12,
        false,
        [](std::uint64_t) { return std::vector<Parameters>{{}}; },
        no_reject,
        [](const Parameters&, const EngineConfig&) {
            return closed(gamma_product_rhs(), gamma_product_rhs_glaisher());
        },
    });

    c.push_back({
        "gamma.sum-v-log-factorial",
        "engine sum of v ln(v!) from 1 to -1/2 with sigma = 2 against its closed form",
        {"products"},
        1e-6,
        false,
        [](std::uint64_t) { return std::vector<Parameters>{{}}; },
        no_reject,
        [](const Parameters&, const EngineConfig& cfg) {
            return from_engine(frac_sum_right(v_log_factorial_summand(Degree(2)), 1.0, -0.5, cfg),
                               sum_v_log_factorial_minus_half());
        },
    });

    c.push_back({
        "zeta.zero-sum",
        "the power sum of v^z up to -1/2 vanishes at minus the first zeta zero",
        {"core", "zeta"},
        1e-5,
        false,
        [](std::uint64_t) { return single("engine", {0.0, 1.0}); },
        no_reject,
        [](const Parameters& p, const EngineConfig& cfg) {
            const Complex z = -first_zeta_zero();
            if (get_int(p, "engine") == 0) {
                Sides s = closed(minus_half_power(z), 0.0);
                s.notes = "closed form, z = " + format_complex(z);
                return s;
            }
            return from_engine(frac_sum_right(power_summand(z), 1.0, -0.5, cfg), 0.0);
        },
    });

    c.push_back({
        "zeta.zero-relation",
        "left sum + (-1)^z right sum from 1 to -1/2 of v^z vanishes",
        {"core", "zeta", "left"},
        1e-5,
        false,
        [](std::uint64_t) { return single("conjugate", {0.0, 1.0}); },
        no_reject,
        [](const Parameters& p, const EngineConfig& cfg) {
            const Complex rho = first_zeta_zero();
            const bool conj = get_int(p, "conjugate") != 0;
            const Complex z = conj ? -std::conj(rho) : -rho;
            const MinusHalfRelation r = left_right_minus_half_relation(z, cfg);
            Sides s;
            s.n_used = r.n_used;
            s.converged = r.converged;
            if (conj) {
                s.lhs = r.left;
                s.rhs = -r.minus_one_pow * r.right;
                s.notes = "raw relation";
            } else {
                // |(-1)^z| is about 2e19 here, so the relation is divided by it
                s.lhs = r.left / r.minus_one_pow;
                s.rhs = -r.right;
                s.notes = "normalized by (-1)^z; raw residual " + format_double(r.raw_residual);
            }
            s.notes += "; z = " + format_complex(z) + "; |(-1)^z| = " +
                       format_double(std::abs(r.minus_one_pow));
            if (!r.converged) {
                s.notes += "; engine did not reach its tolerance";
            }
            return s;
        },
    });

    c.push_back({
        "left.minus-half-relation",
        "left sum + (-1)^z right sum from 1 to -1/2 of v^z vanishes for integer z",
        {"left"},
        1e-6,
        false,
        [](std::uint64_t) { return single("z", {2.0, 3.0, 4.0}); },
        no_reject,
        [](const Parameters& p, const EngineConfig& cfg) {
            const MinusHalfRelation r = left_right_minus_half_relation(get(p, "z"), cfg);
            Sides s;
            s.lhs = r.left;
            s.rhs = -r.minus_one_pow * r.right;
            s.n_used = r.n_used;
            s.converged = r.converged;
            return s;
        },
    });

    c.push_back({
        "left.mirror-law",
        "left sums through the mirror law agree with the direct left limit",
        {"left"},
        1e-9,
        false,
        [](std::uint64_t) {
            return std::vector<Parameters>{
                {{"f", 0.0}, {"a", 0.0}, {"b", 0.5}},
                {{"f", 1.0}, {"a", 1.0}, {"b", Complex(0.5, 1.0)}},
                {{"f", 2.0}, {"a", 0.0}, {"b", Complex(-0.5, 0.3)}},
                {{"f", 3.0}, {"a", 0.5}, {"b", 2.25}},
            };
        },
        no_reject,
        [](const Parameters& p, const EngineConfig& cfg) {
            const Summand f = mirror_summand(get_int(p, "f"));
            const Complex a = get(p, "a");
            const Complex b = get(p, "b");
            Sides s = from_engine(frac_sum_left(f, a, b, cfg), 0.0);
            const FracSumResult direct = frac_sum_left_direct(f, a, b, cfg);
            s.rhs = direct.value;
            s.converged = s.converged && direct.converged;
            s.notes = f.label + "; " + s.notes;
            return s;
        },
    });

    c.push_back({
        "left.polynomial-agreement",
        "left and right sums of a polynomial coincide",
        {"left"},
        1e-9,
        false,
        [](std::uint64_t) {
            return std::vector<Parameters>{
                {{"f", 1.0}, {"b", 0.5}},
                {{"f", 3.0}, {"b", Complex(-0.5, 2.0)}},
            };
        },
        no_reject,
        [](const Parameters& p, const EngineConfig& cfg) {
            const Summand f = mirror_summand(get_int(p, "f"));
            const Complex b = get(p, "b");
            Sides s = from_engine(frac_sum_left(f, 1.0, b, cfg), 0.0);
            s.rhs = frac_sum_right(f, 1.0, b, cfg).value;
            return s;
        },
    });

    c.push_back({
        "optional.quarter-product",
        "exp of the engine sum of v ln(v!) from 1/4 to -1/4 against the Catalan-constant form",
        {"optional"},
        1e-6,
        true,
        [](std::uint64_t) { return std::vector<Parameters>{{}}; },
        no_reject,
        [](const Parameters&, const EngineConfig& cfg) {
            Sides s = from_engine(quarter_product_lhs(cfg), quarter_product_rhs());
            s.notes = "working sigma 4; " + s.notes;
            return s;
        },
    });

    c.push_back({
        "optional.stieltjes-product",
        "exp of the engine sum of ln(v) ln(v!) from 1 to -1/2 against the Stieltjes-constant form",
        {"optional"},
        1e-6,
        true,
        [](std::uint64_t) { return single("gamma1_sign", {-1.0, 1.0}); },
        no_reject,
        [](const Parameters& p, const EngineConfig& cfg) {
            const double sign = get(p, "gamma1_sign").real() < 0.0 ? -1.0 : 1.0;
            const double g1 = sign * std::abs(special::constants::stieltjes_gamma1);
            Sides s = from_engine(stieltjes_product_lhs(cfg), stieltjes_product_rhs(g1));
            s.notes = "gamma1 = " + format_double(g1) + "; working sigma 4; " + s.notes;
            return s;
        },
    });

    return c;
}

}  // namespace

const std::vector<IdentityCase>& catalog() {
    static const std::vector<IdentityCase> cases = build_catalog();
    return cases;
}

const IdentityCase* find_case(const std::string& id) {
    for (const IdentityCase& c : catalog()) {
        if (c.id == id) {
            return &c;
        }
    }
    return nullptr;
}

bool in_suite(const IdentityCase& c, const std::string& suite) {
    if (suite == "all") {
        return !c.optional;
    }
    return std::find(c.suites.begin(), c.suites.end(), suite) != c.suites.end();
}

CaseRecord make_record(const IdentityCase& c, const Parameters& p, const Sides& s,
                       double tol_scale) {
    CaseRecord r;
    r.id = c.id;
    r.parameters = p;
    r.lhs = s.lhs;
    r.rhs = s.rhs;
    r.abs_residual = s.residual();
    const double scale = std::abs(s.rhs);
    r.rel_residual = scale > 0.0 ? r.abs_residual / scale : r.abs_residual;
    r.tol = c.tol * tol_scale;
    r.pass = r.abs_residual <= r.tol || r.rel_residual <= r.tol;
    r.n_used = s.n_used;
    r.notes = s.notes;
    r.optional = c.optional;
    return r;
}

std::vector<CaseRecord> run_case(const IdentityCase& c, std::uint64_t seed, double tol_scale,
                                 const EngineConfig& cfg) {
    std::vector<CaseRecord> out;
    for (const Parameters& p : c.grid(seed)) {
        const auto start = std::chrono::steady_clock::now();
        CaseRecord r;
        if (std::string why = c.reject(p); !why.empty()) {
            r = make_record(c, p, {}, tol_scale);
            r.pass = false;
            r.notes = "rejected: " + why;
        } else {
            try {
                r = make_record(c, p, c.evaluate(p, cfg), tol_scale);
            } catch (const Error& e) {
                constexpr double nan = std::numeric_limits<double>::quiet_NaN();
                r = make_record(c, p, {}, tol_scale);
                r.lhs = r.rhs = {nan, nan};
                r.abs_residual = r.rel_residual = nan;
                r.pass = false;
                r.notes = std::string("error: ") + e.what();
            }
        }
        r.runtime_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(r));
    }
    return out;
}

GridRng::GridRng(std::uint64_t seed, const std::string& stream) {
    // FNV-1a keeps the stream hash identical across standard libraries.
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : stream) {
        h = (h ^ ch) * 1099511628211ULL;
    }
    gen_.seed(seed ^ h);
}

double GridRng::uniform(double lo, double hi) {
    const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

Complex GridRng::complex_in_box(double re_lo, double re_hi, double im_lo, double im_hi) {
    const double re = uniform(re_lo, re_hi);
    return {re, uniform(im_lo, im_hi)};
}

}  // namespace fracsum::identities
