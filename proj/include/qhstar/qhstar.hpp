#pragma once

#include "io.hpp"
