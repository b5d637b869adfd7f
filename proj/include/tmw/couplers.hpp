#ifndef TMW_COUPLERS_HPP
#define TMW_COUPLERS_HPP

#include "tmw/common.hpp"

#endif
