// SPDX-License-Identifier: Apache-2.0
//
// Property suites shared by the unit tests and the acceptance runner. Each
// function runs `instances` randomized cases and returns the number of
// violated checks (0 = pass).
#pragma once

#include <cstddef>
#include <cstdint>

namespace testsupport {

uint64_t prop_packet_ingest(uint64_t seed, size_t instances);
uint64_t prop_flow_table(uint64_t seed, size_t instances);
uint64_t prop_sfts_model(uint64_t seed, size_t instances);
uint64_t prop_statistical(uint64_t seed, size_t instances);
uint64_t prop_temporal(uint64_t seed, size_t instances);
uint64_t prop_spectral(uint64_t seed, size_t instances);
uint64_t prop_behavior(uint64_t seed, size_t instances);
uint64_t prop_export(uint64_t seed, size_t instances);
uint64_t prop_pipeline(uint64_t seed, size_t instances);

} // namespace testsupport
