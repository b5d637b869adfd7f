#include "tmw/interference.hpp"
