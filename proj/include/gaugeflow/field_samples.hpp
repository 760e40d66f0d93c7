#pragma once

#include <map>
#include <vector>

#include "gaugeflow/errors.hpp"
#include "gaugeflow/field_symbol.hpp"

namespace gaugeflow {

// Density floor below which 1/rho and log(rho) evaluations are refused.
inline constexpr double kRhoFloor = 1e-8;

// Grid samples of hydrodynamic field symbols. All arrays share one length.
class FieldSamples {
  public:
    void set(FieldSymbol sym, std::vector<double> values) {
        if (!data_.empty() && values.size() != n_)
            throw Error("field sample arrays must share one length");
        n_ = values.size();
        data_[sym] = std::move(values);
    }

    bool has(FieldSymbol sym) const { return data_.count(sym) > 0; }

    const std::vector<double>& get(FieldSymbol sym) const {
        auto it = data_.find(sym);
        if (it == data_.end()) throw MissingFieldSamples(sym.name());
        return it->second;
    }

    std::size_t size() const { return n_; }
    bool empty() const { return data_.empty(); }

  private:
    std::map<FieldSymbol, std::vector<double>> data_;
    std::size_t n_ = 0;
};

}  // namespace gaugeflow
