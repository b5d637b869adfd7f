#ifndef TMW_INTERFERENCE_HPP
#define TMW_INTERFERENCE_HPP

#include "tmw/common.hpp"

#endif
