#pragma once

#include "landscape/bigint.hpp"
#include "landscape/classify.hpp"
#include "landscape/construct.hpp"
#include "landscape/cyclotomic.hpp"
#include "landscape/decompose.hpp"
#include "landscape/gbf.hpp"
#include "landscape/io.hpp"
#include "landscape/moments.hpp"
#include "landscape/search.hpp"
#include "landscape/transforms.hpp"
