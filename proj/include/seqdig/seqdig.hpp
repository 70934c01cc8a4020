#pragma once

#include "build.hpp"
#include "digraph.hpp"
#include "dpw.hpp"
#include "error.hpp"
#include "io.hpp"
#include "recognize.hpp"
#include "sequences.hpp"
