from typing import List

from pydantic import BaseModel

from moyal.cli.commands.base import Command
from moyal.cli.commands.bounds import BoundsCommand
from moyal.cli.commands.continuity import ContinuityCommand
from moyal.cli.commands.prop1 import Prop1Command
from moyal.cli.commands.series import SeriesCommand
from moyal.cli.commands.star import StarCommand
from moyal.cli.commands.witness import WitnessCommand


class CommandToolkit(BaseModel):
    def get_commands(self) -> List[Command]:
        return [
            StarCommand(),
            SeriesCommand(),
            Prop1Command(),
            BoundsCommand(),
            ContinuityCommand(),
            WitnessCommand(),
        ]
