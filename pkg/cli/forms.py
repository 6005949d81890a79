from django import forms
from django.core.exceptions import ValidationError

from config.limits import get_group_size_guard
from config.validators import COXETER_TYPE_ERROR
from coxeter.exceptions import CoxeterTypeError
from coxeter.roots import build_root_system
from coxeter.types import parse_type
from matroid.orders import DEFAULT, resolve_order

FORMAT_TEXT = "text"
FORMAT_JSON = "json"
FORMAT_DOT = "dot"
FORMAT_CHOICES = [(FORMAT_TEXT, "Text"), (FORMAT_JSON, "JSON"), (FORMAT_DOT, "DOT")]


class ConfigForm(forms.Form):
    type = forms.CharField(max_length=64, error_messages={"required": COXETER_TYPE_ERROR})
    order = forms.CharField(required=False, initial=DEFAULT)
    cache_dir = forms.CharField(required=False)
    allow_large = forms.BooleanField(required=False)
    format = forms.ChoiceField(choices=FORMAT_CHOICES, required=False, initial=FORMAT_TEXT)
    threads = forms.IntegerField(required=False, min_value=1)

    def clean_type(self):
        text = (self.cleaned_data.get("type") or "").strip()
        try:
            self.ctype = parse_type(text)
        except CoxeterTypeError as exc:
            raise ValidationError(str(exc))
        return str(self.ctype)

    def clean_order(self):
        return (self.cleaned_data.get("order") or DEFAULT).strip()

    def clean_format(self):
        return self.cleaned_data.get("format") or FORMAT_TEXT

    def clean_cache_dir(self):
        return (self.cleaned_data.get("cache_dir") or "").strip() or None

    def clean(self):
        cleaned_data = super().clean()
        if "type" not in cleaned_data:
            return cleaned_data

        rs = build_root_system(self.ctype)
        guard = get_group_size_guard()
        if rs.order > guard and not cleaned_data.get("allow_large"):
            self.add_error(
                "allow_large",
                f"|W| = {rs.order} is above the guard of {guard}; pass --allow-large to run it anyway.",
            )

        if "order" in cleaned_data:
            try:
                cleaned_data["reflection_order"] = resolve_order(rs, cleaned_data["order"])
            except ValueError as exc:
                self.add_error("order", str(exc))

        cleaned_data["root_system"] = rs
        return cleaned_data

    def error_text(self) -> str:
        parts = []
        for name, errors in self.errors.items():
            label = "input" if name == "__all__" else name
            parts.extend(f"{label}: {message}" for message in errors)
        return "; ".join(parts)
