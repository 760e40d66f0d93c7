#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gaugeflow {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// ---- expression / parsing ----

struct SyntaxError : Error {
    std::size_t position;
    std::string expected;
    SyntaxError(std::size_t pos, const std::string& what_expected)
        : Error("syntax error at position " + std::to_string(pos) +
                ": expected " + what_expected),
          position(pos),
          expected(what_expected) {}
};

struct NonIntegerExponent : Error {
    explicit NonIntegerExponent(std::size_t pos)
        : Error("exponent at position " + std::to_string(pos) +
                " must be an integer literal") {}
};

struct UnknownFunction : Error {
    std::string name;
    explicit UnknownFunction(const std::string& fn)
        : Error("unknown function '" + fn + "'"), name(fn) {}
};

struct NonMonomialDivisor : Error {
    NonMonomialDivisor()
        : Error("division only defined for single-monomial divisors") {}
};

struct RationalOverflow : Error {
    RationalOverflow() : Error("rational coefficient overflow") {}
};

struct IntegralNodePresent : Error {
    IntegralNodePresent()
        : Error("operation not defined on expressions with integral nodes") {}
};

struct MaxOrderExceeded : Error {
    int order;
    explicit MaxOrderExceeded(int n)
        : Error("derivative order " + std::to_string(n) +
                " exceeds MAX_ORDER"),
          order(n) {}
};

// ---- evaluation ----

struct UnboundParameter : Error {
    std::string name;
    explicit UnboundParameter(const std::string& param)
        : Error("parameter '" + param + "' is not bound"), name(param) {}
};

struct MissingFieldSamples : Error {
    std::string symbol;
    explicit MissingFieldSamples(const std::string& sym)
        : Error("no grid samples for field symbol " + sym), symbol(sym) {}
};

struct VacuumDensity : Error {
    double min_rho;
    explicit VacuumDensity(double mn)
        : Error("density reaches " + std::to_string(mn) +
                ", below the vacuum floor"),
          min_rho(mn) {}
};

struct MissingIntegrator : Error {
    MissingIntegrator()
        : Error("expression contains an integral node but no cumulative "
                "integrator was supplied") {}
};

// ---- derivation ----

struct NonConservingPotential : Error {
    NonConservingPotential()
        : Error("potential depends on S itself; the continuity equation has "
                "a source and the gauge transformation is undefined") {}
};

// ---- models ----

struct UnknownModel : Error {
    std::string name;
    explicit UnknownModel(const std::string& model)
        : Error("unknown model '" + model + "'"), name(model) {}
};

struct MissingParameter : Error {
    std::string name;
    explicit MissingParameter(const std::string& param)
        : Error("model parameter '" + param + "' missing"), name(param) {}
};

struct RescaleOutOfRange : Error {
    double value;
    explicit RescaleOutOfRange(double v)
        : Error("|2mD/hbar| = " + std::to_string(v) +
                " >= 1; phase rescaling undefined"),
          value(v) {}
};

struct NoClosedForm : Error {
    NoClosedForm()
        : Error("model has no closed-form transformed equation; only "
                "residual verification is available") {}
};

struct EIPDegenerate : Error {
    EIPDegenerate()
        : Error("1 + kappa*rho reaches zero; EIP current degenerates") {}
};

// ---- time stepping / diagnostics ----

struct StabilityBoundViolated : Error {
    double dt, bound;
    StabilityBoundViolated(double step, double limit)
        : Error("dt = " + std::to_string(step) +
                " exceeds the stability bound " + std::to_string(limit)),
          dt(step),
          bound(limit) {}
};

struct NaNDetected : Error {
    double t;
    explicit NaNDetected(double when)
        : Error("non-finite field values at t = " + std::to_string(when)),
          t(when) {}
};

struct InsufficientSnapshots : Error {
    InsufficientSnapshots()
        : Error("residual diagnostics need at least 3 stored snapshots") {}
};

// ---- configuration ----

struct ConfigError : Error {
    std::string key;
    ConfigError(const std::string& which, const std::string& msg)
        : Error("config error [" + which + "]: " + msg), key(which) {}
};

}  // namespace gaugeflow
