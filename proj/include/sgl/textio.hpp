#ifndef SGL_TEXTIO_HPP
#define SGL_TEXTIO_HPP

#include <string>

namespace sgl {

/// 17 significant digits, locale-independent ('.' decimal point), the
/// round-trip precision used for CSV cells.
std::string format_g17(double x);

/// Fixed-point with the given number of decimals, locale-independent.
std::string format_fixed(double x, int decimals);

}  // namespace sgl

#endif
