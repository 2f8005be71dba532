#pragma once

#include "numsg/core.hpp"
#include "numsg/explorer.hpp"
#include "numsg/kernel.hpp"
#include "numsg/known_counts.hpp"
#include "numsg/parallel.hpp"
