#pragma once

#include <string>
#include <string_view>

namespace fuzzydoc {

/// Porter's suffix-stripping algorithm, following the rules of the original
/// 1980 description (no later amendments such as BLI->BLE or LOGI->LOG).
/// Input is expected to be lowercase ASCII; other bytes are passed through
/// and treated as consonants. Short words are stemmed too, so "is" -> "i".
std::string porter_stem(std::string_view word);

}  // namespace fuzzydoc
