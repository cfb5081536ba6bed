#ifndef NBHO_SYSTEM_IO_HPP
#define NBHO_SYSTEM_IO_HPP

#include <string>
#include <vector>

#include "nbho/model.hpp"

namespace nbho {

// One parsed input document: the system plus any quantum states listed
// alongside it.
struct SystemDocument {
  SystemInput input;
  std::vector<QuantumState> states;
};

// Parses the JSON schema {dimension, masses, mass_scale?, one_body?,
// two_body?: [{i, j, g}], states?: [{n: [...], l?: [...]}]}. Unknown keys
// are an error. Throws InputError("ParseError") with a field diagnostic.
SystemDocument parse_system_document(const std::string& text);

// Reads and validates a system file end to end.
ParticleSystem parse_system_file(const std::string& path);

SystemDocument parse_system_document_file(const std::string& path);

// Emits a document that re-parses to an identical system.
std::string serialize_system(const ParticleSystem& system);

}  // namespace nbho

#endif
