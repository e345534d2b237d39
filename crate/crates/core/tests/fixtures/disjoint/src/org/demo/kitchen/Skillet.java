package org.demo.kitchen;

public class Skillet {
    private Chef chef;
    private Recipe recipe;
    private Ingredient ingredient;

    public Skillet(Chef chef, Recipe recipe, Ingredient ingredient) {
        this.chef = chef;
        this.recipe = recipe;
        this.ingredient = ingredient;
    }

    public int castIronWeight() {
        return 3;
    }

    public int searTemperature() {
        return 220;
    }

    public Chef chef() {
        return chef;
    }
}
