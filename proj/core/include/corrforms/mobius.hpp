/*
    Copyright 2026 The corrforms Authors

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

#include "corrforms/rational_function.hpp"

namespace corrforms {

/// t -> (a t + b)/(c t + d) with ad - bc != 0.
class MobiusTransform {
 public:
  MobiusTransform(Scalar a, Scalar b, Scalar c, Scalar d);

  static MobiusTransform identity(Field field);
  /// t -> t + shift.
  static MobiusTransform translation(const Scalar& shift);

  Field field() const { return a_.field(); }
  const Scalar& a() const noexcept { return a_; }
  const Scalar& b() const noexcept { return b_; }
  const Scalar& c() const noexcept { return c_; }
  const Scalar& d() const noexcept { return d_; }

  MobiusTransform inverse() const { return MobiusTransform(d_, -b_, -c_, a_); }
  RationalMap as_map() const;

 private:
  Scalar a_, b_, c_, d_;
};

/// phi o sigma o phi^{-1}.
RationalMap mobius_conjugate(const RationalMap& sigma, const MobiusTransform& phi);

}  // namespace corrforms
