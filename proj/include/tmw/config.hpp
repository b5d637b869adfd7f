#ifndef TMW_CONFIG_HPP
#define TMW_CONFIG_HPP

#include "tmw/common.hpp"

#endif
