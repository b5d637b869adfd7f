#ifndef TMW_GRATING_HPP
#define TMW_GRATING_HPP

#include "tmw/common.hpp"

#endif
