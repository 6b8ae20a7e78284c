// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "simpord/checkers.hpp"
#include "simpord/embedding.hpp"
#include "simpord/error.hpp"
#include "simpord/lpo.hpp"
#include "simpord/order.hpp"
#include "simpord/ordinal.hpp"
#include "simpord/term.hpp"
#include "simpord/wfp.hpp"
