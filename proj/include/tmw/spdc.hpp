#ifndef TMW_SPDC_HPP
#define TMW_SPDC_HPP

#include "tmw/common.hpp"

#endif
