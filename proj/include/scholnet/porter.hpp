#pragma once

#include <string>

namespace scholnet {

// Porter stemming algorithm (the classic variant, matching the widely used
// reference implementation including its bli->ble and logi->log departures).
// Expects a lowercase word; characters outside a-z pass the word through
// unchanged.
std::string porter_stem(const std::string& word);

} // namespace scholnet
