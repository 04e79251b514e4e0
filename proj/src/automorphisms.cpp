// Copyright 2026 The pogs Authors
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

#include "pogs/automorphisms.hpp"

#include <string>

namespace pogs {

namespace {

bool is_bijection(std::span<const std::size_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (std::size_t y : images) {
    if (y >= images.size() || seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

}  // namespace

Permutation::Permutation(std::vector<std::size_t> images)
    : images_(std::move(images)) {
  if (!is_bijection(images_)) throw InputError("not a bijection: " + str());
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i;
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::then(const Permutation& other) const {
  if (other.n() != n()) throw InputError("permutation sizes differ");
  std::vector<std::size_t> images(n());
  for (std::size_t i = 0; i < n(); ++i) images[i] = other(images_[i]);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> images(n());
  for (std::size_t i = 0; i < n(); ++i) images[images_[i]] = i;
  return Permutation(std::move(images));
}

std::string Permutation::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i]);
  }
  return out + "]";
}

Verdict is_automorphism(const PoGammaSemigroup& s,
                        std::span<const std::size_t> perm) {
  if (perm.size() != s.n()) throw InputError("permutation length differs from |S|");
  if (!is_bijection(perm)) throw InputError("not a bijection");
  const std::vector<std::size_t> f(perm.begin(), perm.end());
  const std::size_t n = s.n();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t g = 0; g < s.m(); ++g)
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t image_of_product = f[s.at(x, g, y)];
        const std::size_t product_of_images = s.at(f[x], g, f[y]);
        if (image_of_product != product_of_images) {
          return Verdict::fail({.clause = Clause::kOperationPreserving,
                                .elements = {x, y},
                                .sorts = {g},
                                .products = {image_of_product, product_of_images},
                                .automorphism = f});
        }
      }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (s.leq(x, y) != s.leq(f[x], f[y])) {
        return Verdict::fail({.clause = Clause::kOrderIsomorphic,
                              .elements = {x, y},
                              .automorphism = f});
      }
  return Verdict::pass();
}

namespace {

// Depth-first search over partial injections 0..k-1 -> S with images tried
// in increasing order, so complete maps come out lexicographically.
class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const PoGammaSemigroup& s)
      : s_(s), image_(s.n(), kUnset), used_(s.n(), false) {}

  std::vector<Automorphism> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  // Checks every constraint that became decidable once `x` was assigned.
  bool consistent(std::size_t x) const {
    const std::size_t fx = image_[x];
    for (std::size_t y = 0; y <= x; ++y) {
      const std::size_t fy = image_[y];
      if (s_.leq(x, y) != s_.leq(fx, fy)) return false;
      if (s_.leq(y, x) != s_.leq(fy, fx)) return false;
      for (std::size_t g = 0; g < s_.m(); ++g) {
        if (!product_ok(x, g, y) || !product_ok(y, g, x)) return false;
      }
    }
    // Products of earlier pairs that land on x.
    for (std::size_t a = 0; a < x; ++a)
      for (std::size_t b = 0; b < x; ++b)
        for (std::size_t g = 0; g < s_.m(); ++g)
          if (s_.at(a, g, b) == x && !product_ok(a, g, b)) return false;
    return true;
  }

  bool product_ok(std::size_t a, std::size_t g, std::size_t b) const {
    const std::size_t p = s_.at(a, g, b);
    if (image_[p] == kUnset) {
      // f(p) is still open, so its forced value must not be taken yet.
      return !used_[s_.at(image_[a], g, image_[b])];
    }
    return image_[p] == s_.at(image_[a], g, image_[b]);
  }

  void extend(std::size_t x) {
    if (x == s_.n()) {
      found_.emplace_back(image_);
      return;
    }
    for (std::size_t v = 0; v < s_.n(); ++v) {
      if (used_[v]) continue;
      image_[x] = v;
      used_[v] = true;
      if (consistent(x)) extend(x + 1);
      used_[v] = false;
      image_[x] = kUnset;
    }
  }

  const PoGammaSemigroup& s_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
  std::vector<Automorphism> found_;
};

}  // namespace

std::vector<Automorphism> enumerate_automorphisms(const PoGammaSemigroup& s) {
  return AutomorphismSearch(s).run();
}

CrispSubset apply_to_subset(const Automorphism& f, const CrispSubset& a) {
  if (f.n() != a.universe_size()) throw InputError("permutation and subset sizes differ");
  CrispSubset out(a.universe_size());
  for (std::size_t x : a.members()) out.insert(f(x));
  return out;
}

Verdict is_characteristic_interior_ideal(const PoGammaSemigroup& s,
                                         const CrispSubset& a) {
  const auto auts = enumerate_automorphisms(s);
  return is_characteristic_interior_ideal(s, a, auts);
}

Verdict is_characteristic_interior_ideal(const PoGammaSemigroup& s,
                                         const CrispSubset& a,
                                         std::span<const Automorphism> auts) {
  if (Verdict v = is_interior_ideal(s, a); !v) return v;
  for (const Automorphism& f : auts) {
    if (apply_to_subset(f, a) == a) continue;
    for (std::size_t x : a.members())
      if (!a.contains(f(x))) {
        return Verdict::fail({.clause = Clause::kAutomorphismInvariance,
                              .elements = {x},
                              .automorphism = {f.images().begin(),
                                               f.images().end()}});
      }
  }
  return Verdict::pass();
}

}  // namespace pogs
