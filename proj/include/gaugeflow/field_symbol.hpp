#pragma once

#include <string>
#include <tuple>

namespace gaugeflow {

// Largest spatial-derivative order representable in an expression. All
// built-in potentials need order <= 2; the bound keeps Euler-Lagrange sums
// finite for arbitrary input.
inline constexpr int kMaxOrder = 8;

enum class FieldBase { Rho, S };

// One hydrodynamic field symbol: rho_n or S_n, where n counts spatial
// derivatives (order 0 is the field itself).
struct FieldSymbol {
    FieldBase base = FieldBase::Rho;
    int order = 0;

    friend bool operator==(const FieldSymbol& a, const FieldSymbol& b) {
        return a.base == b.base && a.order == b.order;
    }
    friend bool operator!=(const FieldSymbol& a, const FieldSymbol& b) {
        return !(a == b);
    }
    // Rho sorts before S, then by derivative order.
    friend bool operator<(const FieldSymbol& a, const FieldSymbol& b) {
        return std::tuple(static_cast<int>(a.base), a.order) <
               std::tuple(static_cast<int>(b.base), b.order);
    }

    FieldSymbol next_order() const { return {base, order + 1}; }

    std::string name() const {
        std::string stem = (base == FieldBase::Rho) ? "rho" : "S";
        if (order == 0) return stem;
        return stem + "_" + std::to_string(order);
    }
};

inline FieldSymbol rho_sym(int order = 0) { return {FieldBase::Rho, order}; }
inline FieldSymbol s_sym(int order = 0) { return {FieldBase::S, order}; }

}  // namespace gaugeflow
