#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles/statevector.hpp"
#include "stabmc/tableau.hpp"

using namespace stabmc;

namespace {

std::vector<bool> bits(std::initializer_list<int> v) {
    std::vector<bool> out;
    for (int b : v) out.push_back(b != 0);
    return out;
}

Tableau bell_pair() {
    Tableau t(2);
    t.apply(GateKind::Had, 0);
    t.apply_cnot(0, 1);
    return t;
}

Tableau ghz3() {
    Tableau t(3);
    t.apply(GateKind::Had, 0);
    t.apply_cnot(0, 1);
    t.apply_cnot(1, 2);
    return t;
}

}  // namespace

TEST_CASE("fresh tableau is |0...0>", "[tableau]") {
    Tableau t(1);
    auto m = t.measure(0);
    REQUIRE_FALSE(m.random);
    REQUIRE(m.value == false);
    REQUIRE(t.check_invariants());

    Tableau empty;
    auto vals = empty.support_valuations();
    REQUIRE(vals.size() == 1);
    REQUIRE(vals[0].bits.empty());
    REQUIRE(vals[0].amplitude == ExactAmplitude{0, 0, false});

    Tableau t3(3);
    auto p = t3.probability([](const std::vector<bool>& v) { return v[0] || v[1] || v[2]; });
    REQUIRE(p == Rational(0));
    auto vals3 = t3.support_valuations();
    REQUIRE(vals3.size() == 1);
    REQUIRE(vals3[0].bits == bits({0, 0, 0}));
    REQUIRE(vals3[0].amplitude.halflog == 0);
}

TEST_CASE("extend appends a |0> qubit without disturbing the state", "[tableau]") {
    Tableau plus(1);
    plus.apply(GateKind::Had, 0);
    QubitId fresh = plus.extend();
    REQUIRE(fresh == 1);
    REQUIRE(plus.qubit_count() == 2);
    auto vals = plus.support_valuations();
    REQUIRE(vals.size() == 2);
    REQUIRE(vals[0].bits == bits({0, 0}));
    REQUIRE(vals[1].bits == bits({1, 0}));
    auto m = plus.measure(fresh);
    REQUIRE_FALSE(m.random);
    REQUIRE(m.value == false);
    REQUIRE(plus.check_invariants());

    Tableau empty;
    QubitId q0 = empty.extend();
    REQUIRE(q0 == 0);
    REQUIRE_FALSE(empty.measure(q0).random);
}

TEST_CASE("single-qubit gate algebra", "[tableau]") {
    Tableau t(1);
    t.apply(GateKind::Had, 0);
    REQUIRE(t.measure(0).random);
    REQUIRE(t.check_invariants());

    t.apply(GateKind::Had, 0);
    auto m = t.measure(0);
    REQUIRE_FALSE(m.random);
    REQUIRE(m.value == false);

    Tableau tx(1);
    tx.apply(GateKind::X, 0);
    auto mx = tx.measure(0);
    REQUIRE_FALSE(mx.random);
    REQUIRE(mx.value == true);
}

TEST_CASE("bell pair support and amplitudes", "[tableau]") {
    auto t = bell_pair();
    auto vals = t.support_valuations();
    REQUIRE(vals.size() == 2);
    REQUIRE(vals[0].bits == bits({0, 0}));
    REQUIRE(vals[1].bits == bits({1, 1}));
    REQUIRE(vals[0].amplitude == ExactAmplitude{0, 1, false});
    REQUIRE(vals[1].amplitude == ExactAmplitude{0, 1, false});
    REQUIRE(t.check_invariants());
}

TEST_CASE("measurement and collapse on entangled states", "[tableau]") {
    auto t = bell_pair();
    REQUIRE(t.measure(0).random);
    REQUIRE(t.measure(1).random);

    for (bool outcome : {false, true}) {
        auto u = t;
        u.collapse(0, outcome);
        auto m0 = u.measure(0);
        REQUIRE_FALSE(m0.random);
        REQUIRE(m0.value == outcome);
        auto m1 = u.measure(1);
        REQUIRE_FALSE(m1.random);
        REQUIRE(m1.value == outcome);
        REQUIRE(u.check_invariants());
    }

    auto b = bell_pair();
    b.collapse(0, true);
    auto vals = b.support_valuations();
    REQUIRE(vals.size() == 1);
    REQUIRE(vals[0].bits == bits({1, 1}));

    auto g = ghz3();
    g.collapse(2, false);
    auto gv = g.support_valuations();
    REQUIRE(gv.size() == 1);
    REQUIRE(gv[0].bits == bits({0, 0, 0}));

    Tableau plus(1);
    plus.apply(GateKind::Had, 0);
    plus.collapse(0, false);
    auto pv = plus.support_valuations();
    REQUIRE(pv.size() == 1);
    REQUIRE(pv[0].bits == bits({0}));

    Tableau zero(1);
    REQUIRE_THROWS_AS(zero.collapse(0, false), std::logic_error);
}

TEST_CASE("phase gate produces imaginary amplitudes", "[tableau]") {
    Tableau t(1);
    t.apply(GateKind::Had, 0);
    t.apply(GateKind::Ph, 0);
    auto vals = t.support_valuations();
    REQUIRE(vals.size() == 2);
    REQUIRE(vals[0].bits == bits({0}));
    REQUIRE(vals[0].amplitude == ExactAmplitude{0, 1, false});
    REQUIRE(vals[1].bits == bits({1}));
    REQUIRE(vals[1].amplitude == ExactAmplitude{1, 1, false});  // +i / sqrt(2)
}

TEST_CASE("probability is an exact dyadic rational", "[tableau]") {
    Tableau plus(1);
    plus.apply(GateKind::Had, 0);
    REQUIRE(plus.probability([](const std::vector<bool>& v) { return !v[0]; }) == Rational(1, 2));

    Tableau zero(1);
    REQUIRE(zero.probability([](const std::vector<bool>& v) { return v[0]; }) == Rational(0));

    auto g = ghz3();
    REQUIRE(g.probability([](const std::vector<bool>& v) { return v[0] == v[1]; }) == Rational(1));
}

TEST_CASE("support cap bounds enumeration", "[tableau]") {
    Tableau plus(1);
    plus.apply(GateKind::Had, 0);
    REQUIRE_THROWS_AS(plus.support_valuations(0), SupportTooLarge);
    try {
        plus.support_valuations(0);
        FAIL("expected SupportTooLarge");
    } catch (const SupportTooLarge& e) {
        REQUIRE(e.exponent() == 1);
        REQUIRE(e.cap() == 0);
    }
    // a deterministic state has a one-element support even under cap 0
    Tableau zero(4);
    REQUIRE(zero.support_valuations(0).size() == 1);
}

TEST_CASE("entanglement rank test", "[tableau]") {
    auto b = bell_pair();
    REQUIRE(b.is_unentangled({0, 1}));
    REQUIRE_FALSE(b.is_unentangled({0}));
    REQUIRE_FALSE(b.is_unentangled({1}));

    Tableau t(2);
    t.apply(GateKind::Had, 1);  // |0> x |+>
    REQUIRE(t.is_unentangled({0}));
    REQUIRE(t.is_unentangled({1}));

    auto g = ghz3();
    REQUIRE_FALSE(g.is_unentangled({0, 1}));
    REQUIRE_FALSE(g.is_unentangled({2}));
    REQUIRE(g.is_unentangled({0, 1, 2}));

    REQUIRE_THROWS_AS(t.is_unentangled({7}), std::out_of_range);
}

TEST_CASE("factor amplitudes on unentangled subsystems", "[tableau]") {
    Tableau plus(1);
    plus.apply(GateKind::Had, 0);
    auto a1 = plus.amplitude({0}, bits({1}));
    REQUIRE(a1 == ExactAmplitude{0, 1, false});
    REQUIRE(a1.re() == Catch::Approx(1.0 / std::sqrt(2.0)));
    REQUIRE(a1.im() == 0.0);

    Tableau zero(1);
    REQUIRE(zero.amplitude({0}, bits({0})) == ExactAmplitude{0, 0, false});
    REQUIRE(zero.amplitude({0}, bits({1})).zero);

    Tableau sp(1);
    sp.apply(GateKind::Had, 0);
    sp.apply(GateKind::Ph, 0);
    auto ai = sp.amplitude({0}, bits({1}));
    REQUIRE(ai == ExactAmplitude{1, 1, false});
    REQUIRE(ai.im() == Catch::Approx(1.0 / std::sqrt(2.0)));

    auto b = bell_pair();
    REQUIRE_THROWS_AS(b.amplitude({0}, bits({0})), EntangledSubsystem);

    // factor of a product state embedded in a larger system
    Tableau t(3);
    t.apply(GateKind::Had, 1);
    t.apply(GateKind::X, 2);
    auto av = t.amplitude({1, 2}, bits({1, 1}));
    REQUIRE(av == ExactAmplitude{0, 1, false});
    REQUIRE(t.amplitude({1, 2}, bits({1, 0})).zero);
}

TEST_CASE("debug dump lists signed pauli rows", "[tableau]") {
    Tableau t(2);
    t.apply(GateKind::Had, 0);
    t.apply_cnot(0, 1);
    std::string d = t.dump();
    REQUIRE(d.find("---") != std::string::npos);
    REQUIRE(d.find("+XX") != std::string::npos);  // stabilizer X0X1
    REQUIRE(d.find("+ZZ") != std::string::npos);  // stabilizer Z0Z1

    Tableau one(1);
    one.apply(GateKind::X, 0);
    REQUIRE(one.dump().find("-Z") != std::string::npos);
}

TEST_CASE("cnot input validation", "[tableau]") {
    Tableau t(2);
    REQUIRE_THROWS_AS(t.apply_cnot(1, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(t.apply(GateKind::Had, 5), std::out_of_range);
}

namespace {

struct CircuitStep {
    enum Kind { H, S, X, CNOT, MEASURE } kind;
    unsigned a = 0, b = 0;
};

// Applies one step to tableau and oracle in lockstep; collapses use the
// tableau's own claimed randomness, cross-checked against the oracle first.
void apply_step(Tableau& t, oracle::StateVector& sv, const CircuitStep& st, std::mt19937& rng) {
    switch (st.kind) {
        case CircuitStep::H: t.apply(GateKind::Had, st.a); sv.h(st.a); break;
        case CircuitStep::S: t.apply(GateKind::Ph, st.a); sv.s(st.a); break;
        case CircuitStep::X: t.apply(GateKind::X, st.a); sv.x(st.a); break;
        case CircuitStep::CNOT: t.apply_cnot(st.a, st.b); sv.cnot(st.a, st.b); break;
        case CircuitStep::MEASURE: {
            auto m = t.measure(st.a);
            bool oracle_value = false;
            bool oracle_det = sv.outcome_deterministic(st.a, oracle_value);
            REQUIRE(m.random == !oracle_det);
            if (m.random) {
                bool pick = rng() & 1;
                t.collapse(st.a, pick);
                sv.collapse(st.a, pick);
            } else {
                REQUIRE(m.value == oracle_value);
            }
            break;
        }
    }
}

void compare_support(const Tableau& t, const oracle::StateVector& sv) {
    auto tv = t.support_valuations();
    auto ov = sv.support();
    REQUIRE(tv.size() == ov.size());
    const unsigned m = sv.half_exponent();
    const unsigned k = tv.empty() ? 0 : tv.front().amplitude.halflog;
    REQUIRE((size_t{1} << k) == tv.size());
    const oracle::GaussianInt base = ov.front().amp;
    for (size_t i = 0; i < tv.size(); ++i) {
        REQUIRE(tv[i].bits == ov[i].bits);
        // squared magnitude: |amp|^2 / 2^m must equal 2^-k
        REQUIRE(m >= k);
        REQUIRE(ov[i].amp.norm2() == (__int128)1 << (m - k));
        // relative phase against the lexicographically smallest element
        REQUIRE(ov[i].amp == base.times_i_pow(tv[i].amplitude.phase_power));
    }
}

}  // namespace

TEST_CASE("random circuits agree with the exact statevector oracle", "[tableau][oracle]") {
    std::mt19937 rng(0xC11FF0AD);
    const int kCircuits = 200;
    for (int c = 0; c < kCircuits; ++c) {
        unsigned n = 1 + rng() % 6;
        Tableau t(n);
        oracle::StateVector sv(n);
        unsigned len = 1 + rng() % 40;
        for (unsigned i = 0; i < len; ++i) {
            CircuitStep st;
            unsigned pick = rng() % 10;
            if (pick < 3) st = {CircuitStep::H, (unsigned)(rng() % n)};
            else if (pick < 5) st = {CircuitStep::S, (unsigned)(rng() % n)};
            else if (pick < 6) st = {CircuitStep::X, (unsigned)(rng() % n)};
            else if (pick < 9 && n >= 2) {
                unsigned a = (unsigned)(rng() % n), b = (unsigned)(rng() % n);
                while (b == a) b = (unsigned)(rng() % n);
                st = {CircuitStep::CNOT, a, b};
            } else st = {CircuitStep::MEASURE, (unsigned)(rng() % n)};
            apply_step(t, sv, st, rng);
        }
        REQUIRE(t.check_invariants());
        compare_support(t, sv);

        // measurement dichotomy on every qubit
        for (unsigned q = 0; q < n; ++q) {
            auto m = t.measure(q);
            bool val = false;
            bool det = sv.outcome_deterministic(q, val);
            REQUIRE(m.random == !det);
            if (det) REQUIRE(m.value == val);
        }

        // entanglement test vs. exact purity, on all proper nonempty subsets
        for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
            std::vector<QubitId> ids;
            std::vector<unsigned> oids;
            for (unsigned q = 0; q < n; ++q)
                if (mask & (1u << q)) { ids.push_back(q); oids.push_back(q); }
            REQUIRE(t.is_unentangled(ids) == sv.subsystem_pure(oids));
        }
    }
}
