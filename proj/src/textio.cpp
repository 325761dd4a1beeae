#include "sgl/textio.hpp"

#include <charconv>

namespace sgl {

std::string format_g17(double x) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, x,
                                 std::chars_format::general, 17);
    return std::string(buf, r.ptr);
}

std::string format_fixed(double x, int decimals) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, x,
                                 std::chars_format::fixed, decimals);
    return std::string(buf, r.ptr);
}

}  // namespace sgl
