#include "tmw/config.hpp"
