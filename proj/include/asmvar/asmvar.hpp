#pragma once

#include "asmvar/antichain.hpp"
#include "asmvar/core.hpp"
#include "asmvar/groth.hpp"
#include "asmvar/io.hpp"
#include "asmvar/order.hpp"
#include "asmvar/poly.hpp"
#include "asmvar/verify.hpp"
#include "asmvar/weak.hpp"
