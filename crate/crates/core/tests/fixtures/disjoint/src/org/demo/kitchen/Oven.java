package org.demo.kitchen;

public class Oven {
    private Recipe recipe;
    private Chef chef;
    private Skillet skillet;
    private Ingredient ingredient;

    public Oven(Recipe recipe, Chef chef) {
        this.recipe = recipe;
        this.chef = chef;
    }

    public int celsiusHeat() {
        return 180;
    }

    public int preheatDelay() {
        return 10;
    }

    public Recipe recipe() {
        return recipe;
    }
}
