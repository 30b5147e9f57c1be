#include <stdexcept>

#include "qcc/hardware.hpp"
#include "preset_data.hpp"

namespace qcc {

const std::string& preset_text(const std::string& name) {
    static const std::string n8 = detail::kPresetN8;
    static const std::string n21 = detail::kPresetN21;
    static const std::string n40 = detail::kPresetN40;
    if (name == "N8") return n8;
    if (name == "N21") return n21;
    if (name == "N40") return n40;
    throw std::invalid_argument("unknown preset '" + name + "' (expected N8, N21 or N40)");
}

HardwareGraph preset(const std::string& name) {
    return load_hardware(preset_text(name));
}

}  // namespace qcc
