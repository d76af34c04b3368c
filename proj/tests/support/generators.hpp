#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cantor/adversary.hpp"
#include "cantor/forcing.hpp"
#include "cantor/random.hpp"
#include "cantor/serialize.hpp"

namespace testgen {

/// A valid condition of depth 2..maxDepth: reservoir and ambient of large
/// measure and a stem grown from {λ} by up to maxSplits splitting extensions.
cantor::Condition randomCondition(cantor::Rng& rng, int maxDepth, int maxSplits);

/// Up to maxEntries rows, each divergent or halting by step maxHalt.
cantor::HaltingTable randomTable(cantor::Rng& rng, int maxEntries, std::uint64_t maxHalt);

struct CertificateRequest {
  std::string command;
  cantor::Json inputs;
  cantor::Json parameters;
};

/// One request per certificate command, drawn from the generator.
std::vector<CertificateRequest> sampleRequests(cantor::Rng& rng);

}  // namespace testgen
