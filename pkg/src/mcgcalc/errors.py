"""Exception types shared across the package."""


class BasisMismatchError(ValueError):
    """Operands live over different bases, or a letter is not admitted."""


class WordSyntaxError(ValueError):
    """Malformed word text; carries the character offset of the bad token."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ImageBudgetError(RuntimeError):
    """Materializing images would exceed the total-letter budget.

    Iterated composition of free-group endomorphisms can blow up
    exponentially; this guard makes the blowup loud instead of silent.
    """

    def __init__(self, needed: int, budget: int):
        super().__init__(f"image of size {needed} exceeds the letter budget {budget}")
        self.needed = needed
        self.budget = budget


class NotZStableError(ValueError):
    """An endomorphism image leaves the subgroup generated by the z letters."""

    def __init__(self, generator: str, image):
        super().__init__(
            f"image of {generator} is not a word in the z generators: {image}"
        )
        self.generator = generator
        self.image = image
