#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cantor/serialize.hpp"

namespace cantor {

inline constexpr std::string_view kCertificateVersion = "cert/v1";

/// Commands that produce certificates: gen, prune, extract, density,
/// adversary-encode, adversary-decode, force-step, force-extend, tt1.
std::vector<std::string> certificateCommands();

/// Runs `command` on the embedded inputs and returns the certificate
///   {"version","command","inputs","inputDigests","parameters","result","checks"}
/// where inputDigests maps each input name to the SHA-256 of its compact
/// JSON and checks maps check names to booleans recomputed from the
/// payload. Throws the command's own errors; MalformedInput for bad
/// inputs, InvalidArgument for an unknown command.
Json certify(std::string_view command, const Json& inputs, const Json& parameters);

struct Verification {
  bool ok = false;
  std::vector<std::string> problems;
};

/// Recomputes the digests and every check from the payload, then reruns
/// the command and compares results. Throws UnknownVersion for a foreign
/// version tag and MalformedCertificate when the record is unusable.
Verification verifyCertificate(const Json& certificate);

/// Pretty-printed certificate text with a trailing newline. Deterministic.
std::string serializeCertificate(const Json& certificate);

}  // namespace cantor
