from extkit.fixtures import *  # noqa # To load the fixtures
