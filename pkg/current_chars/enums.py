import enum


class AutoName(enum.Enum):
    def _generate_next_value_(name, start, count, last_values):
        return name


@enum.unique
class Status(AutoName):
    ok = enum.auto()
    error = enum.auto()


@enum.unique
class OutputFormat(AutoName):
    text = enum.auto()
    json = enum.auto()


@enum.unique
class CharacterKind(AutoName):
    local = enum.auto()
    # Needs an explicit truncation degree
    global_ = 'global'
