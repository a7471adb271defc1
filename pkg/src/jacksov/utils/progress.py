from typing import Any, Callable, Dict, Optional, TypedDict, Union

from tqdm import tqdm


class TqdmState(TypedDict):
    """
    The dictionary returned by `tqdm.format_dict`.

    - n: current iteration count.
    - total: total number of iterations, if known.
    - elapsed: seconds since the bar started.
    - prefix: the `desc` string.
    - unit: iteration unit.
    - rate: iterations per second, if it can be computed.
    - postfix: data set via `set_postfix()`.
    """

    n: int
    total: Optional[int]
    elapsed: float
    ncols: Optional[int]
    nrows: Optional[int]
    prefix: Optional[str]
    ascii: Union[bool, str]
    unit: str
    unit_scale: Union[bool, float]
    rate: Optional[float]
    bar_format: Optional[str]
    postfix: Optional[Union[str, Dict[str, Any]]]
    unit_divisor: float
    initial: Optional[int]
    colour: Optional[str]


class SuiteProgress(tqdm):
    """
    A tqdm bar over the cases of a verification suite that also hands its
    state to `broadcast_func` whenever tqdm refreshes the display.

    Broadcasting happens only in `display()`, so it follows tqdm's own
    refresh throttling (mininterval, miniters).
    """

    def __init__(
        self,
        *args,
        broadcast_func: Optional[Callable[[TqdmState], None]] = None,
        **kwargs,
    ):
        self.broadcast_func = broadcast_func
        kwargs.setdefault("unit", "case")
        kwargs.setdefault("leave", False)
        super().__init__(*args, **kwargs)

    def display(self, msg=None, pos=None):
        super().display(msg=msg, pos=pos)
        self._broadcast_state()

    def _broadcast_state(self):
        if self.broadcast_func is None:
            return
        self.broadcast_func(self.format_dict)
