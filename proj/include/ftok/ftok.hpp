#pragma once

#include "ftok/algebra.hpp"
#include "ftok/combin.hpp"
#include "ftok/error.hpp"
#include "ftok/harness.hpp"
#include "ftok/io.hpp"
#include "ftok/paths.hpp"
#include "ftok/shapes.hpp"
#include "ftok/sixvertex.hpp"
#include "ftok/symfun.hpp"
#include "ftok/tableaux.hpp"
