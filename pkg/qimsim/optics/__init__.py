from .analytic import analytic_gA_ghost
from .analytic import analytic_gA_image
from .analytic import analytic_gA_image_integrated
from .analytic import analytic_gB
from .analytic import analytic_gB_focal
from .analytic import focal_delta_regime
from .analytic import ghost_magnification
from .analytic import imaging_defocus
from .elements import ArmSpec
from .elements import Bucket
from .elements import BucketMode
from .elements import DetectorSpec
from .elements import Element
from .elements import FarFieldPoint
from .elements import FreeSpace
from .elements import GaussianPupil
from .elements import Mask
from .elements import PointArray
from .elements import ThinLens
from .masks import DoubleSlit
from .masks import FileMask
from .masks import GaussianMask
from .masks import MaskProfile
from .masks import SampledMask
from .masks import SingleSlit
from .masks import load_mask_file
from .propagate import propagate
from .propagate import propagate_through
from .propagate import quadratic_phase
from .transfer import TransferMatrix
from .transfer import arm_transfer

__all__ = [
    "ArmSpec",
    "Bucket",
    "BucketMode",
    "DetectorSpec",
    "DoubleSlit",
    "Element",
    "FarFieldPoint",
    "FileMask",
    "FreeSpace",
    "GaussianMask",
    "GaussianPupil",
    "Mask",
    "MaskProfile",
    "PointArray",
    "SampledMask",
    "SingleSlit",
    "ThinLens",
    "TransferMatrix",
    "analytic_gA_ghost",
    "analytic_gA_image",
    "analytic_gA_image_integrated",
    "analytic_gB",
    "analytic_gB_focal",
    "arm_transfer",
    "focal_delta_regime",
    "ghost_magnification",
    "imaging_defocus",
    "load_mask_file",
    "propagate",
    "propagate_through",
    "quadratic_phase",
]
