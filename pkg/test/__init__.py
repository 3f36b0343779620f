""" Test package for the `shingle_similarity` package.

[pytest]: https://docs.pytest.org

Usage examples:

`pytest test`

`pytest test/test_minhash.py::test_criterion_exhaustive`

`pytest -k baseline test`

"""

# Copyright 2023 shingle_similarity contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.

