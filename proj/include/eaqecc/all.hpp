// Copyright 2026 The eaqecc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "eaqecc/bounds.hpp"
#include "eaqecc/code.hpp"
#include "eaqecc/construct.hpp"
#include "eaqecc/distance.hpp"
#include "eaqecc/error.hpp"
#include "eaqecc/gf.hpp"
#include "eaqecc/io.hpp"
#include "eaqecc/matrix.hpp"
#include "eaqecc/params.hpp"
#include "eaqecc/propagate.hpp"
#include "eaqecc/random.hpp"
#include "eaqecc/tables.hpp"
