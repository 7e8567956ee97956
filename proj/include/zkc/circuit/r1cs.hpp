// Copyright 2026 The zkcompliance Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZKC_CIRCUIT_R1CS_HPP_
#define ZKC_CIRCUIT_R1CS_HPP_

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zkc/common/bytes.hpp"
#include "zkc/common/crypto.hpp"
#include "zkc/common/error.hpp"
#include "zkc/math/bn254_fields.hpp"

namespace zkc::circuit {

using bn254::Fr;

// Index into the full assignment z. Index 0 is the constant 1, indices
// 1..num_public are the public inputs, everything after is private.
struct Variable {
  std::uint32_t index = 0;
  static constexpr Variable one() { return {0}; }
};

struct Term {
  std::uint32_t var;
  Fr coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse linear combination, terms sorted by variable index with no zero
// coefficients.
class LinearCombination {
 public:
  LinearCombination() = default;
  LinearCombination(Variable v) { terms_.push_back({v.index, Fr::one()}); }  // NOLINT
  static LinearCombination constant(const Fr& c) {
    LinearCombination lc;
    if (!c.is_zero()) lc.terms_.push_back({0, c});
    return lc;
  }

  LinearCombination& add_term(std::uint32_t var, const Fr& coeff) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), var,
                               [](const Term& t, std::uint32_t v) { return t.var < v; });
    if (it != terms_.end() && it->var == var) {
      it->coeff += coeff;
      if (it->coeff.is_zero()) terms_.erase(it);
    } else if (!coeff.is_zero()) {
      terms_.insert(it, {var, coeff});
    }
    return *this;
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && a->var < b->var)) {
        out.push_back(*a++);
      } else if (a == terms_.end() || b->var < a->var) {
        out.push_back(*b++);
      } else {
        Fr c = a->coeff + b->coeff;
        if (!c.is_zero()) out.push_back({a->var, c});
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) { return *this += o * -Fr::one(); }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(LinearCombination a, const Fr& s) {
    if (s.is_zero()) return {};
    for (auto& t : a.terms_) t.coeff *= s;
    return a;
  }

  Fr evaluate(std::span<const Fr> z) const {
    Fr acc;
    for (const auto& t : terms_) acc += t.coeff * z[t.var];
    return acc;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

 private:
  std::vector<Term> terms_;
};

using LC = LinearCombination;

// One rank-1 constraint <a,z> * <b,z> = <c,z>.
struct Constraint {
  LC a, b, c;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

inline constexpr std::string_view kConstraintSystemMagic = "ZKCS";
inline constexpr std::uint16_t kConstraintSystemVersion = 1;

struct ConstraintSystem {
  std::uint16_t version = kConstraintSystemVersion;
  std::uint32_t bit_width = 0;
  std::string hash_id;
  std::vector<std::string> public_layout;
  std::uint32_t num_variables = 1;  // includes the constant-one slot
  std::vector<Constraint> constraints;

  std::size_t num_public() const { return public_layout.size(); }
  std::size_t num_constraints() const { return constraints.size(); }

  bool is_satisfied(std::span<const Fr> z) const {
    if (z.size() != num_variables || z.empty() || !(z[0] == Fr::one())) return false;
    for (const auto& c : constraints) {
      if (!(c.a.evaluate(z) * c.b.evaluate(z) == c.c.evaluate(z))) return false;
    }
    return true;
  }

  // Binary export: magic, version, bit_width, hash_id, public layout, then the
  // constraint matrices as (var, 32-byte big-endian coefficient) lists.
  Bytes serialize() const {
    ByteWriter w;
    w.raw(as_bytes(kConstraintSystemMagic));
    w.u16(version);
    w.u32(bit_width);
    w.str(hash_id);
    w.u32(static_cast<std::uint32_t>(public_layout.size()));
    for (const auto& name : public_layout) w.str(name);
    w.u32(num_variables);
    w.u32(static_cast<std::uint32_t>(constraints.size()));
    auto put_lc = [&](const LC& lc) {
      w.u32(static_cast<std::uint32_t>(lc.terms().size()));
      for (const auto& t : lc.terms()) {
        w.u32(t.var);
        w.raw(t.coeff.to_be_bytes());
      }
    };
    for (const auto& c : constraints) {
      put_lc(c.a);
      put_lc(c.b);
      put_lc(c.c);
    }
    return std::move(w).take();
  }

  static ConstraintSystem deserialize(ByteView data) {
    ByteReader r(data);
    auto bad = [](const char* what) { return Error(ErrorCode::kShapeMismatch, what); };
    auto magic = r.fixed<4>();
    if (std::string_view(reinterpret_cast<const char*>(magic.data()), 4) != kConstraintSystemMagic) {
      throw bad("bad constraint system magic");
    }
    ConstraintSystem cs;
    cs.version = r.u16();
    if (cs.version != kConstraintSystemVersion) throw bad("unsupported constraint system version");
    cs.bit_width = r.u32();
    cs.hash_id = r.str();
    std::uint32_t npub = r.u32();
    if (npub > 64) throw bad("too many public inputs");
    for (std::uint32_t i = 0; i < npub; ++i) cs.public_layout.push_back(r.str());
    cs.num_variables = r.u32();
    std::uint32_t ncons = r.u32();
    if (r.failed() || ncons > (1u << 24)) throw bad("truncated constraint system");
    auto get_lc = [&]() {
      LC lc;
      std::uint32_t n = r.u32();
      if (n > r.remaining()) throw bad("truncated linear combination");
      for (std::uint32_t i = 0; i < n; ++i) {
        std::uint32_t var = r.u32();
        Fr coeff;
        if (!Fr::from_be_bytes_canonical(r.raw(32), coeff) || var >= cs.num_variables) {
          throw bad("bad linear combination term");
        }
        lc.add_term(var, coeff);
      }
      return lc;
    };
    cs.constraints.reserve(ncons);
    for (std::uint32_t i = 0; i < ncons; ++i) {
      Constraint c;
      c.a = get_lc();
      c.b = get_lc();
      c.c = get_lc();
      cs.constraints.push_back(std::move(c));
    }
    if (!r.ok_and_done()) throw bad("trailing or truncated constraint system bytes");
    return cs;
  }

  // SHA-256 of the serialized system; binds keys and proofs to this circuit.
  Digest fingerprint() const { return sha256(serialize()); }
};

// Allocates variables and records constraints while tracking a concrete
// assignment, so one gadget description produces both the constraint system
// and the witness.
class R1csBuilder {
 public:
  R1csBuilder() { assignment_.push_back(Fr::one()); }

  // Public inputs must all be allocated before any private variable.
  Variable input(std::string name, const Fr& value) {
    if (assignment_.size() != cs_.public_layout.size() + 1) {
      throw std::logic_error("public inputs must precede private variables");
    }
    cs_.public_layout.push_back(std::move(name));
    return push(value);
  }
  Variable witness(const Fr& value) { return push(value); }

  void enforce(LC a, LC b, LC c) { cs_.constraints.push_back({std::move(a), std::move(b), std::move(c)}); }

  Fr value(const LC& lc) const { return lc.evaluate(assignment_); }
  Fr value(Variable v) const { return assignment_[v.index]; }

  ConstraintSystem& system() { return cs_; }
  const std::vector<Fr>& assignment() const { return assignment_; }

  std::pair<ConstraintSystem, std::vector<Fr>> finish() && {
    cs_.num_variables = static_cast<std::uint32_t>(assignment_.size());
    return {std::move(cs_), std::move(assignment_)};
  }

 private:
  Variable push(const Fr& value) {
    assignment_.push_back(value);
    return {static_cast<std::uint32_t>(assignment_.size() - 1)};
  }

  ConstraintSystem cs_;
  std::vector<Fr> assignment_;
};

}  // namespace zkc::circuit

#endif  // ZKC_CIRCUIT_R1CS_HPP_
