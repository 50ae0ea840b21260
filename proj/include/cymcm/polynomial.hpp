/*
   Copyright 2026 The cymcm authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "cymcm/error.hpp"
#include "cymcm/scalar.hpp"

namespace cymcm {

/**
 * Sparse multivariate polynomial over an exact scalar domain: an ordered
 * variable list plus a map from exponent vectors to nonzero coefficients.
 * Total degrees in this project stay tiny, so all algorithms are the naive
 * exact ones.
 */
template <ExactScalar K>
class Poly {
   public:
    using Exponents = std::vector<int>;

    explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Poly constant(std::vector<std::string> vars, const K& value) {
        Poly p(std::move(vars));
        if (!value.is_zero()) p.terms_.emplace(Exponents(p.vars_.size(), 0), value);
        return p;
    }

    static Poly monomial(std::vector<std::string> vars, Exponents exps, const K& coeff) {
        Poly p(std::move(vars));
        if (exps.size() != p.vars_.size()) throw error("exponent vector length mismatch");
        for (int e : exps)
            if (e < 0) throw error("negative exponent in monomial");
        if (!coeff.is_zero()) p.terms_.emplace(std::move(exps), coeff);
        return p;
    }

    /// The variable `name` as a monomial, with coefficient `one`.
    static Poly variable(std::vector<std::string> vars, const std::string& name, const K& one) {
        Poly p(std::move(vars));
        Exponents e(p.vars_.size(), 0);
        e[p.index_of(name)] = 1;
        p.terms_.emplace(std::move(e), one);
        return p;
    }

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<Exponents, K>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int t = 0;
            for (int x : e) t += x;
            d = std::max(d, t);
        }
        return d;
    }

    Poly operator-() const {
        Poly r(vars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend Poly operator+(const Poly& x, const Poly& y) {
        x.check_vars(y);
        Poly r = x;
        for (const auto& [e, c] : y.terms_) r.add_term(e, c);
        return r;
    }
    friend Poly operator-(const Poly& x, const Poly& y) { return x + (-y); }
    friend Poly operator*(const Poly& x, const Poly& y) {
        x.check_vars(y);
        Poly r(x.vars_);
        for (const auto& [ex, cx] : x.terms_)
            for (const auto& [ey, cy] : y.terms_) {
                Exponents e(ex.size());
                for (size_t i = 0; i < e.size(); ++i) e[i] = ex[i] + ey[i];
                r.add_term(e, cx * cy);
            }
        return r;
    }

    Poly scaled(const K& c) const {
        Poly r(vars_);
        if (c.is_zero()) return r;
        for (const auto& [e, coeff] : terms_) r.add_term(e, coeff * c);
        return r;
    }

    Poly pow(int e) const {
        if (e < 0) throw error("negative polynomial power");
        if (e == 0) {
            if (terms_.empty()) throw error("0^0 of the zero polynomial");
            return constant(vars_, terms_.begin()->second.one());
        }
        Poly acc = *this;
        for (int i = 1; i < e; ++i) acc = acc * *this;
        return acc;
    }

    friend bool operator==(const Poly& x, const Poly& y) {
        return x.vars_ == y.vars_ && x.terms_ == y.terms_;
    }
    friend bool operator!=(const Poly& x, const Poly& y) { return !(x == y); }

    /**
     * Substitutes an image polynomial for every variable. All images must
     * share one variable list; the result lives in that list. Every declared
     * variable of *this needs an image.
     */
    Poly substitute(const std::map<std::string, Poly>& images) const {
        if (vars_.empty()) return *this;
        std::vector<const Poly*> image_of(vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i) {
            auto it = images.find(vars_[i]);
            if (it == images.end())
                throw incomplete_substitution("no substitution image for variable '" + vars_[i] + "'");
            image_of[i] = &it->second;
            if (it->second.vars_ != image_of[0]->vars_)
                throw domain_mismatch("substitution images use different variable lists");
        }
        Poly result(image_of[0]->vars_);
        for (const auto& [e, c] : terms_) {
            Poly term = constant(result.vars_, c);
            for (size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) term = term * *image_of[i];
            result = result + term;
        }
        return result;
    }

    /**
     * Rewrites every occurrence of var^exponent by `replacement` until all
     * degrees in var drop below `exponent`; this is division-free reduction
     * modulo the relation var^exponent = replacement. The replacement must
     * not contain var with degree >= exponent.
     */
    Poly reduce_power(const std::string& var, int exponent, const Poly& replacement) const {
        check_vars(replacement);
        if (exponent <= 0) throw error("rewrite exponent must be positive");
        const size_t vi = index_of(var);
        for (const auto& [e, c] : replacement.terms_)
            if (e[vi] >= exponent) throw error("rewrite replacement still contains " + var + "^" +
                                               std::to_string(exponent));
        Poly work = *this;
        for (;;) {
            auto hot = std::find_if(work.terms_.begin(), work.terms_.end(),
                                    [&](const auto& t) { return t.first[vi] >= exponent; });
            if (hot == work.terms_.end()) return work;
            Exponents e = hot->first;
            const K c = hot->second;
            work.terms_.erase(hot);
            e[vi] -= exponent;
            work = work + monomial(vars_, std::move(e), c) * replacement;
        }
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.to_string() + ")";
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                s += "*" + vars_[i];
                if (e[i] > 1) s += "^" + std::to_string(e[i]);
            }
        }
        return s;
    }

   private:
    size_t index_of(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw error("unknown variable '" + name + "'");
        return static_cast<size_t>(it - vars_.begin());
    }

    void check_vars(const Poly& other) const {
        if (vars_ != other.vars_)
            throw domain_mismatch("polynomials over different variable lists cannot be combined");
    }

    void add_term(const Exponents& e, const K& c) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        } else if (c.is_zero()) {
            terms_.erase(it);
        }
    }

    std::vector<std::string> vars_;
    std::map<Exponents, K> terms_;
};

/**
 * Exact polynomial identity check: true iff the target becomes identically
 * zero after substituting the given images and fully expanding. No sampling.
 */
template <ExactScalar K>
bool poly_identity_check(const Poly<K>& target, const std::map<std::string, Poly<K>>& substitution) {
    return target.substitute(substitution).is_zero();
}

}  // namespace cymcm
