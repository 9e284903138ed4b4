// Copyright 2026 The nohide Authors
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

#include <catch2/catch_amalgamated.hpp>

#include "nohide/structure.hpp"
#include "test_helpers.hpp"

using namespace nohide;

TEST_CASE("randomization isometry satisfies the hiding structure") {
  StructureReport report = verify_no_hiding_structure(make_randomization_isometry());
  REQUIRE(report.sigma_fixed);
  REQUIRE(report.ancilla_isometry);
  REQUIRE(report.max_residual < 1e-12);
  REQUIRE(report.samples == 64);
  REQUIRE(report.seed == kDefaultStructureSeed);
}

TEST_CASE("erasure move is the single-eigenvalue special case") {
  StructureReport report = verify_no_hiding_structure(make_erasure_isometry());
  REQUIRE(report.sigma_fixed);
  REQUIRE(report.ancilla_isometry);
  REQUIRE(report.max_residual < 1e-12);
}

TEST_CASE("keeping the system is not a hiding process") {
  StructureReport report = verify_no_hiding_structure(make_identity_isometry());
  REQUIRE_FALSE(report.sigma_fixed);
}

TEST_CASE("non-isometry input is rejected") {
  ComplexMatrix cols = ComplexMatrix::Zero(4, 2);
  cols(0, 0) = 1.0;
  cols(0, 1) = 1.0;  // columns not orthonormal
  REQUIRE_THROWS_AS(HidingIsometry(2, 2, cols), std::invalid_argument);
}

TEST_CASE("structure verification is reproducible for a fixed seed") {
  StructureReport a = verify_no_hiding_structure(make_randomization_isometry(), 16, 99);
  StructureReport b = verify_no_hiding_structure(make_randomization_isometry(), 16, 99);
  REQUIRE(a.max_residual == b.max_residual);
}
