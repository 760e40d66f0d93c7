#pragma once

#include <map>
#include <string>

#include "gaugeflow/errors.hpp"

namespace gaugeflow {

// Physical constants plus named model parameters. hbar and m are addressable
// under their reserved names so expressions treat them like any other
// symbolic parameter.
class Params {
  public:
    Params(double hbar = 1.0, double m = 1.0) : hbar_(hbar), m_(m) {
        if (!(hbar > 0.0)) throw Error("hbar must be positive");
        if (!(m > 0.0)) throw Error("m must be positive");
    }

    double hbar() const { return hbar_; }
    double m() const { return m_; }

    void set(const std::string& name, double value) {
        if (name == "hbar" || name == "m") {
            if (!(value > 0.0)) throw Error(name + " must be positive");
            (name == "hbar" ? hbar_ : m_) = value;
        } else {
            named_[name] = value;
        }
    }

    bool has(const std::string& name) const {
        return name == "hbar" || name == "m" || named_.count(name) > 0;
    }

    double get(const std::string& name) const {
        if (name == "hbar") return hbar_;
        if (name == "m") return m_;
        auto it = named_.find(name);
        if (it == named_.end()) throw UnboundParameter(name);
        return it->second;
    }

    const std::map<std::string, double>& named() const { return named_; }

  private:
    double hbar_;
    double m_;
    std::map<std::string, double> named_;
};

}  // namespace gaugeflow
