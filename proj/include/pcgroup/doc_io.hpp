// Reading and writing presentation documents (UTF-8 JSON). Generator
// indices in documents are 1-based; the in-memory model is 0-based.
#pragma once

#include <string>

#include "pcgroup/presentation.hpp"

namespace pcgroup {

PcPresentation parse_presentation(const std::string& json_text);
PcPresentation load_presentation(const std::string& path);

std::string presentation_to_json(const PcPresentation& pres);
void save_presentation(const PcPresentation& pres, const std::string& path);

}  // namespace pcgroup
